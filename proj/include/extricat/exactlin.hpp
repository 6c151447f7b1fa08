#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace extricat {

// Prime field F_p, p small (2..97). All arithmetic is exact and reduced.
struct FieldSpec {
    unsigned p = 2;
};

bool is_prime(unsigned n);
void validate_field(const FieldSpec& f);

using Vec = std::vector<uint8_t>;

// Dense row-major matrix over F_p. Entries always reduced mod p.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, unsigned p);

    static Mat identity(int n, unsigned p);
    static Mat zero(int rows, int cols, unsigned p);
    static Mat from_rows(const std::vector<std::vector<int>>& rows, unsigned p);
    static Mat col_vector(const Vec& v, unsigned p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    unsigned p() const { return p_; }

    uint8_t at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, unsigned v) { e_[static_cast<size_t>(r) * cols_ + c] = static_cast<uint8_t>(v % p_); }

    const std::vector<uint8_t>& entries() const { return e_; }

    bool is_zero() const;
    bool is_identity() const;

    bool operator==(const Mat& o) const = default;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    unsigned p_ = 2;
    std::vector<uint8_t> e_;
};

Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat neg(const Mat& a);
Mat mul(const Mat& a, const Mat& b);
Mat scalar_mul(unsigned c, const Mat& a);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat direct_sum(const Mat& a, const Mat& b);
Vec apply_vec(const Mat& a, const Vec& v);

// In-place reduced row echelon form. Pivot rule: leftmost nonzero column,
// first available row, which makes every echelon form canonical for the
// row space. Returns pivot column indices in increasing order.
std::vector<int> rref(Mat& m);

int rank(const Mat& m);

// Canonical basis of the right null space, returned as the columns of a
// cols x nullity matrix. rank + nullity = cols.
Mat kernel_basis(const Mat& m);

// Canonical echelon generators of the column space, as columns.
Mat image_basis(const Mat& m);

// One solution of m x = b (free variables set to 0) or nullopt if b is not
// in the image.
std::optional<Vec> solve(const Mat& m, const Vec& b);

struct SolveAll {
    Vec particular;
    Mat kernel; // columns
};
std::optional<SolveAll> solve_all(const Mat& m, const Vec& b);

// Solve A X = B columnwise; nullopt if any column fails.
std::optional<Mat> solve_matrix(const Mat& a, const Mat& b);
// Solve X A = B.
std::optional<Mat> solve_matrix_left(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

struct CokernelData {
    Mat projection; // q : rows(m) -> dim, q m = 0, rank q = dim
    int dim = 0;
};

// Pivot-based canonical cokernel of the column space of m. The projection
// reads off the non-pivot coordinates after elimination, so its kernel is
// exactly the column space and repeated runs agree bit for bit.
CokernelData cokernel_data(const Mat& m);

// Quotient of F_p^n by the column space of `subspace`, with a canonical
// linear section (unit vectors at non-pivot coordinates).
struct QuotientSpace {
    Mat projection; // dim x n
    Mat section;    // n x dim, projection * section = id
    int dim = 0;
};
QuotientSpace quotient_by_columns(const Mat& subspace, int n, unsigned p);

} // namespace extricat
