#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "qoalab/types.hpp"

namespace qoalab {

// Finite direct sum of full matrix blocks M_{n_1} + ... + M_{n_k}.
struct BlockAlgebra {
  std::vector<Index> blocks;

  BlockAlgebra() = default;
  BlockAlgebra(std::initializer_list<Index> dims) : blocks(dims) {}
  explicit BlockAlgebra(std::vector<Index> dims) : blocks(std::move(dims)) {}

  Index num_blocks() const { return static_cast<Index>(blocks.size()); }
  Index total_dim() const;
  bool uniform() const;  // all block dimensions equal
  bool operator==(const BlockAlgebra& other) const {
    return blocks == other.blocks;
  }

  void validate() const;

  // Tensor product algebra: blocks are all ordered pairs, dims multiplied.
  BlockAlgebra tensor(const BlockAlgebra& other) const;
};

// Element of a block algebra, stored per block. Doubles as the density of a
// positive functional, where the pairing is phi(x) = sum_j Tr(rho_j x_j).
struct BlockElement {
  BlockAlgebra algebra;
  std::vector<Matrix> parts;

  static BlockElement zero(const BlockAlgebra& alg);
  static BlockElement identity(const BlockAlgebra& alg);

  void validate() const;

  Complex trace() const;
  Real trace_real() const { return trace().real(); }
  Real frobenius_norm() const;
  Real operator_norm() const;  // largest singular value over blocks
  BlockElement adjoint() const;
  bool is_hermitian(Real tol = 1e-12) const;

  // Block-diagonal dense embedding into M_{total_dim}.
  Matrix to_dense() const;

  BlockElement& operator+=(const BlockElement& other);
  BlockElement& operator-=(const BlockElement& other);
  BlockElement& operator*=(Complex scalar);

  friend BlockElement operator+(BlockElement a, const BlockElement& b) {
    a += b;
    return a;
  }
  friend BlockElement operator-(BlockElement a, const BlockElement& b) {
    a -= b;
    return a;
  }
  friend BlockElement operator*(Complex s, BlockElement a) {
    a *= s;
    return a;
  }
  friend BlockElement operator*(const BlockElement& a, const BlockElement& b);
};

// Kronecker product taken blockwise; lives on algebra.tensor(other.algebra).
BlockElement block_kron(const BlockElement& a, const BlockElement& b);

// Ginibre-style random elements for sampling.
Matrix random_gaussian_matrix(Index n, std::mt19937_64& rng);
Matrix random_hermitian(Index n, std::mt19937_64& rng);
Matrix random_psd(Index n, std::mt19937_64& rng);
Matrix random_density(Index n, std::mt19937_64& rng);
Vector random_unit_vector(Index n, std::mt19937_64& rng);

BlockElement random_element(const BlockAlgebra& alg, std::mt19937_64& rng);
BlockElement random_hermitian_element(const BlockAlgebra& alg,
                                      std::mt19937_64& rng);
// Random block-diagonal density with full support (trace one overall).
BlockElement random_block_density(const BlockAlgebra& alg,
                                  std::mt19937_64& rng);

}  // namespace qoalab
