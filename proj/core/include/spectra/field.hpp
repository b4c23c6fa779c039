#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/rational.hpp"

namespace spectra {

/// A prime field F_q. Construction rejects composite or extension-field moduli.
class FieldSpec {
  public:
    explicit FieldSpec(int q);

    int q() const { return q_; }

    int add(int a, int b) const { return (a + b) % q_; }
    int sub(int a, int b) const { return (a - b + q_) % q_; }
    int mul(int a, int b) const { return static_cast<int>((static_cast<long>(a) * b) % q_); }
    int neg(int a) const { return a == 0 ? 0 : q_ - a; }
    int inv(int a) const;

    bool operator==(const FieldSpec&) const = default;

  private:
    int q_;
};

/// Dense matrix over F_q, entries canonical in [0, q).
class FieldMatrix {
  public:
    FieldMatrix(FieldSpec spec, std::size_t rows, std::size_t cols);
    FieldMatrix(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<int> entries);

    static FieldMatrix identity(FieldSpec spec, std::size_t n);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, int v);

    std::vector<int> mat_vec(const std::vector<int>& x) const;
    FieldMatrix mat_mul(const FieldMatrix& rhs) const;

    /// Row rank over F_q by Gaussian elimination.
    std::size_t rank() const;

    bool operator==(const FieldMatrix&) const = default;

  private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<int> entries_;
};

/// Text format: "q m n" then m lines of n entries. Rejects out-of-range entries.
FieldMatrix parse_matrix(std::istream& in);
FieldMatrix parse_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const FieldMatrix& a);
std::string matrix_to_string(const FieldMatrix& a);

}  // namespace spectra
