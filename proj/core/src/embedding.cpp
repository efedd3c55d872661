#include "hoopsnet/embedding.hpp"

#include <cmath>
#include <ostream>

#include "hoopsnet/csv.hpp"
#include "hoopsnet/error.hpp"

namespace hoopsnet {

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ValidationError("cosine_similarity: dimension mismatch (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<double> concat_features(std::span<const double> src, std::span<const double> tgt) {
  if (src.size() != tgt.size()) {
    throw ValidationError("concat_features: dimension mismatch (" + std::to_string(src.size()) +
                          " vs " + std::to_string(tgt.size()) + ")");
  }
  std::vector<double> out;
  out.reserve(src.size() * 2);
  out.insert(out.end(), src.begin(), src.end());
  out.insert(out.end(), tgt.begin(), tgt.end());
  return out;
}

void write_embedding_csv(const EmbeddingMatrix& emb, const std::vector<std::string>& labels,
                         std::ostream& os, std::string_view meta) {
  if (!meta.empty()) os << "# " << meta << "\n";
  os << "label";
  for (std::size_t j = 0; j < emb.dims; ++j) os << ",e" << j;
  os << '\n';
  for (std::size_t i = 0; i < emb.rows; ++i) {
    os << csv::escape(labels.at(i));
    for (double v : emb.row(i)) os << ',' << csv::format_double(v, 17);
    os << '\n';
  }
}

}  // namespace hoopsnet
