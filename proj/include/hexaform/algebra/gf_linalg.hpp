#pragma once

#include "hexaform/algebra/galois_field.hpp"

#include <cstddef>
#include <vector>

namespace hexaform::algebra {

using GFVector = std::vector<GFElem>;

/// Dense matrix of raw element codes over one field. Used on hot paths where
/// carrying the parent per entry is wasteful.
struct CodeMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<GaloisField::Code> data;

    CodeMatrix() = default;
    CodeMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    GaloisField::Code& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    GaloisField::Code operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const GaloisField& f, CodeMatrix& m);

/// Nullspace basis from the free columns of the reduced echelon form.
std::vector<std::vector<GaloisField::Code>> nullspace(const GaloisField& f, CodeMatrix m);

std::size_t rank(const GaloisField& f, CodeMatrix m);

/// Nullspace of a matrix given by rows of elements of `field`. Every entry
/// must belong to `field`; otherwise UsageError.
std::vector<GFVector> gf_nullspace(const Field& field, const std::vector<GFVector>& rows, std::size_t cols);

std::size_t gf_rank(const Field& field, const std::vector<GFVector>& rows, std::size_t cols);

/// Extends a basis of a subspace (rows, independent) of GF^cols to a basis of
/// the whole space; returns only the added complement vectors.
std::vector<std::vector<GaloisField::Code>> complement_basis(
    const GaloisField& f, const std::vector<std::vector<GaloisField::Code>>& subspace, std::size_t cols);

} // namespace hexaform::algebra
