#include "spectra/field.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace spectra {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

FieldSpec::FieldSpec(int q) : q_(q) {
    if (q < 2) throw ConstraintError("field modulus must be >= 2, got " + std::to_string(q));
    if (!is_prime(q))
        throw ConstraintError("field modulus must be prime (extension fields GF(p^k) are not supported), got " +
                              std::to_string(q));
}

int FieldSpec::inv(int a) const {
    if (a == 0) throw ConstraintError("inverse of zero in F_" + std::to_string(q_));
    // Fermat: a^(q-2) mod q.
    int result = 1, base = a;
    int e = q_ - 2;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldMatrix::FieldMatrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<int> entries)
    : spec_(spec), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw ConstraintError("matrix entry count does not match dimensions");
    for (int e : entries_)
        if (e < 0 || e >= spec_.q())
            throw ConstraintError("matrix entry " + std::to_string(e) + " out of range for F_" +
                                  std::to_string(spec_.q()));
}

FieldMatrix FieldMatrix::identity(FieldSpec spec, std::size_t n) {
    FieldMatrix a(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, i, 1);
    return a;
}

void FieldMatrix::set(std::size_t r, std::size_t c, int v) {
    if (v < 0 || v >= spec_.q()) throw ConstraintError("matrix entry out of range");
    entries_[r * cols_ + c] = v;
}

std::vector<int> FieldMatrix::mat_vec(const std::vector<int>& x) const {
    if (x.size() != cols_)
        throw ConstraintError("mat_vec dimension mismatch: matrix has " + std::to_string(cols_) +
                              " columns, vector has " + std::to_string(x.size()));
    std::vector<int> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        long acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<long>(at(i, j)) * x[j];
        y[i] = static_cast<int>(acc % spec_.q());
    }
    return y;
}

FieldMatrix FieldMatrix::mat_mul(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ConstraintError("mat_mul dimension mismatch");
    FieldMatrix out(spec_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            int aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                int v = spec_.add(out.at(i, j), spec_.mul(aik, rhs.at(k, j)));
                out.set(i, j, v);
            }
        }
    return out;
}

std::size_t FieldMatrix::rank() const {
    std::vector<int> a = entries_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a[pivot * cols_ + col] == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a[rank * cols_ + j], a[pivot * cols_ + j]);
        int pinv = spec_.inv(a[rank * cols_ + col]);
        for (std::size_t j = col; j < cols_; ++j)
            a[rank * cols_ + j] = spec_.mul(a[rank * cols_ + j], pinv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank) continue;
            int f = a[i * cols_ + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                int sub = spec_.mul(f, a[rank * cols_ + j]);
                a[i * cols_ + j] = spec_.sub(a[i * cols_ + j], sub);
            }
        }
        ++rank;
    }
    return rank;
}

FieldMatrix parse_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ConstraintError("matrix file: missing header line");
    std::istringstream hs(header);
    long q, m, n;
    if (!(hs >> q >> m >> n)) throw ConstraintError("matrix file: header must be \"q m n\"");
    if (m < 0 || n < 0) throw ConstraintError("matrix file: negative dimensions");
    FieldSpec spec(static_cast<int>(q));
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(m) * n);
    for (long i = 0; i < m; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw ConstraintError("matrix file: missing row at line " + std::to_string(i + 2));
        std::istringstream ls(line);
        for (long j = 0; j < n; ++j) {
            long v;
            if (!(ls >> v))
                throw ConstraintError("matrix file: malformed entry at line " + std::to_string(i + 2) +
                                      ", column " + std::to_string(j + 1));
            if (v < 0 || v >= q)
                throw ConstraintError("matrix file: entry " + std::to_string(v) + " out of range at line " +
                                      std::to_string(i + 2));
            entries.push_back(static_cast<int>(v));
        }
        long extra;
        if (ls >> extra)
            throw ConstraintError("matrix file: too many entries at line " + std::to_string(i + 2));
    }
    return FieldMatrix(spec, static_cast<std::size_t>(m), static_cast<std::size_t>(n), std::move(entries));
}

FieldMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConstraintError("cannot open matrix file: " + path);
    return parse_matrix(in);
}

void write_matrix(std::ostream& out, const FieldMatrix& a) {
    out << a.spec().q() << " " << a.rows() << " " << a.cols() << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out << " ";
            out << a.at(i, j);
        }
        out << "\n";
    }
}

std::string matrix_to_string(const FieldMatrix& a) {
    std::ostringstream os;
    write_matrix(os, a);
    return os.str();
}

}  // namespace spectra
