#include "extricat/exactlin.hpp"

#include <sstream>
#include <stdexcept>

namespace extricat {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void validate_field(const FieldSpec& f) {
    if (!is_prime(f.p) || f.p > 251)
        throw std::invalid_argument("field modulus must be a small prime, got " + std::to_string(f.p));
}

namespace {

unsigned inv_mod(unsigned a, unsigned p) {
    // p is tiny, a scan beats extended gcd here
    a %= p;
    for (unsigned x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw std::logic_error("inverse of zero");
}

void check_same_field(const Mat& a, const Mat& b) {
    if (a.p() != b.p()) throw std::invalid_argument("field mismatch");
}

} // namespace

Mat::Mat(int rows, int cols, unsigned p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    e_.assign(static_cast<size_t>(rows) * cols, 0);
}

Mat Mat::identity(int n, unsigned p) {
    Mat m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::zero(int rows, int cols, unsigned p) { return Mat(rows, cols, p); }

Mat Mat::from_rows(const std::vector<std::vector<int>>& rows, unsigned p) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(r, c, p);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) {
            int v = rows[i][j] % static_cast<int>(p);
            if (v < 0) v += p;
            m.set(i, j, static_cast<unsigned>(v));
        }
    }
    return m;
}

Mat Mat::col_vector(const Vec& v, unsigned p) {
    Mat m(static_cast<int>(v.size()), 1, p);
    for (size_t i = 0; i < v.size(); ++i) m.set(static_cast<int>(i), 0, v[i]);
    return m;
}

bool Mat::is_zero() const {
    for (uint8_t v : e_)
        if (v != 0) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << static_cast<int>(at(i, j));
        }
    }
    os << "]";
    return os.str();
}

Mat add(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch in add");
    Mat r(a.rows(), a.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

Mat sub(const Mat& a, const Mat& b) { return add(a, neg(b)); }

Mat neg(const Mat& a) {
    Mat r(a.rows(), a.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.p() - a.at(i, j));
    return r;
}

Mat mul(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in mul");
    Mat r(a.rows(), b.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            unsigned av = a.at(i, k);
            if (!av) continue;
            for (int j = 0; j < b.cols(); ++j) r.set(i, j, r.at(i, j) + av * b.at(k, j));
        }
    return r;
}

Mat scalar_mul(unsigned c, const Mat& a) {
    Mat r(a.rows(), a.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, c * a.at(i, j));
    return r;
}

Mat transpose(const Mat& a) {
    Mat r(a.cols(), a.rows(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
    return r;
}

Mat hstack(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Mat r(a.rows(), a.cols() + b.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    return r;
}

Mat vstack(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack col mismatch");
    Mat r(a.rows() + b.rows(), a.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
    return r;
}

Mat direct_sum(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    Mat r(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return r;
}

Vec apply_vec(const Mat& a, const Vec& v) {
    if (static_cast<int>(v.size()) != a.cols()) throw std::invalid_argument("apply size mismatch");
    Vec r(a.rows(), 0);
    for (int i = 0; i < a.rows(); ++i) {
        unsigned acc = 0;
        for (int j = 0; j < a.cols(); ++j) acc += a.at(i, j) * v[j];
        r[i] = static_cast<uint8_t>(acc % a.p());
    }
    return r;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    unsigned p = m.p();
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) {
                uint8_t t = m.at(row, j);
                m.set(row, j, m.at(sel, j));
                m.set(sel, j, t);
            }
        unsigned inv = inv_mod(m.at(row, col), p);
        for (int j = 0; j < m.cols(); ++j) m.set(row, j, inv * m.at(row, j));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            unsigned f = m.at(i, col);
            if (!f) continue;
            for (int j = 0; j < m.cols(); ++j) m.set(i, j, m.at(i, j) + (p - f) * m.at(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const Mat& m) {
    Mat c = m;
    return static_cast<int>(rref(c).size());
}

Mat kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref(r);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(n, static_cast<int>(free_cols.size()), m.p());
    unsigned p = m.p();
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        k.set(fc, static_cast<int>(fi), 1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k.set(pivots[pi], static_cast<int>(fi), p - r.at(static_cast<int>(pi), fc));
    }
    return k;
}

Mat image_basis(const Mat& m) {
    Mat t = transpose(m);
    std::vector<int> pivots = rref(t);
    Mat b(m.rows(), static_cast<int>(pivots.size()), m.p());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < m.rows(); ++j) b.set(j, static_cast<int>(i), t.at(static_cast<int>(i), j));
    return b;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve rhs size mismatch");
    Mat aug = hstack(m, Mat::col_vector(b, m.p()));
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == m.cols()) return std::nullopt; // inconsistent system
    Vec x(m.cols(), 0);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols());
    return x;
}

std::optional<SolveAll> solve_all(const Mat& m, const Vec& b) {
    auto x = solve(m, b);
    if (!x) return std::nullopt;
    return SolveAll{*x, kernel_basis(m)};
}

std::optional<Mat> solve_matrix(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix shape mismatch");
    Mat x(a.cols(), b.cols(), a.p());
    for (int j = 0; j < b.cols(); ++j) {
        Vec col(b.rows());
        for (int i = 0; i < b.rows(); ++i) col[i] = b.at(i, j);
        auto s = solve(a, col);
        if (!s) return std::nullopt;
        for (int i = 0; i < a.cols(); ++i) x.set(i, j, (*s)[i]);
    }
    return x;
}

std::optional<Mat> solve_matrix_left(const Mat& a, const Mat& b) {
    auto xt = solve_matrix(transpose(a), transpose(b));
    if (!xt) return std::nullopt;
    return transpose(*xt);
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto x = solve_matrix(m, Mat::identity(m.rows(), m.p()));
    if (!x) return std::nullopt;
    if (!mul(*x, m).is_identity()) return std::nullopt;
    return x;
}

QuotientSpace quotient_by_columns(const Mat& subspace, int n, unsigned p) {
    if (subspace.cols() > 0 && subspace.rows() != n) throw std::invalid_argument("quotient dimension mismatch");
    Mat t = subspace.cols() > 0 ? transpose(subspace) : Mat(0, n, p);
    std::vector<int> pivots = rref(t);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> nonpivot;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) nonpivot.push_back(c);
    int dim = static_cast<int>(nonpivot.size());
    QuotientSpace q;
    q.dim = dim;
    q.projection = Mat(dim, n, p);
    q.section = Mat(n, dim, p);
    for (int i = 0; i < dim; ++i) {
        int np = nonpivot[i];
        q.projection.set(i, np, 1);
        // eliminate the pivot coordinates: x mod im has entry
        // x_np - sum_j x_{p_j} E_j[np] at the non-pivot slot np
        for (size_t j = 0; j < pivots.size(); ++j)
            q.projection.set(i, pivots[j], p - t.at(static_cast<int>(j), np));
        q.section.set(np, i, 1);
    }
    return q;
}

CokernelData cokernel_data(const Mat& m) {
    QuotientSpace q = quotient_by_columns(m, m.rows(), m.p());
    return CokernelData{q.projection, q.dim};
}

} // namespace extricat
