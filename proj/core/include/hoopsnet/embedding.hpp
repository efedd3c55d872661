#pragma once

// Node embedding matrix and the two feature constructions used by the link
// prediction experiments.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hoopsnet {

// |V| x d row-major matrix; row u is node u's embedding.
struct EmbeddingMatrix {
  std::size_t rows = 0;
  std::size_t dims = 0;
  std::vector<double> data;

  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t r, std::size_t d) : rows(r), dims(d), data(r * d, 0.0) {}

  std::span<const double> row(std::size_t u) const {
    return std::span<const double>(data).subspan(u * dims, dims);
  }
  std::span<double> row(std::size_t u) {
    return std::span<double>(data).subspan(u * dims, dims);
  }
};

// a.b / (|a||b|); 0 when either norm is zero. Dimension mismatch is an error.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

// Source entries followed by target entries (length 2d). Order matters:
// concat(a,b) != concat(b,a).
std::vector<double> concat_features(std::span<const double> src, std::span<const double> tgt);

// `label,e0,...,e{d-1}` after `# ...` comment lines recording the training
// configuration. Entries are written losslessly (17 significant digits).
void write_embedding_csv(const EmbeddingMatrix& emb, const std::vector<std::string>& labels,
                         std::ostream& os, std::string_view meta = {});

}  // namespace hoopsnet
