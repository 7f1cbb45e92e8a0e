#pragma once

#include <string>
#include <vector>

#include "refdyn/algebraic.hpp"
#include "refdyn/matrix.hpp"

namespace refdyn {

/// Ordered divisor-class labels of a Picard lattice basis.
class PicardBasis {
public:
    explicit PicardBasis(std::vector<std::string> labels);
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] int size() const { return static_cast<int>(labels_.size()); }
    friend bool operator==(const PicardBasis&, const PicardBasis&) = default;

private:
    std::vector<std::string> labels_;
};

/// Integral action on divisor classes. Column j holds the image of basis
/// element j.
class PicardAction {
public:
    PicardAction(PicardBasis basis, RatMatrix matrix);
    [[nodiscard]] const PicardBasis& basis() const { return basis_; }
    [[nodiscard]] const RatMatrix& matrix() const { return matrix_; }

private:
    PicardBasis basis_;
    RatMatrix matrix_;
};

/// sigma_p on the blow-up with basis (H~, E~(p), F~(p)).
PicardAction single_reflection_action();
/// sigma_q o sigma_p for two points on a line, basis (H, P, Q, R).
PicardAction two_point_action();
/// Matrix product a * b; throws on a basis mismatch.
PicardAction compose(const PicardAction& a, const PicardAction& b);

/// Largest absolute value of an eigenvalue, for matrices whose
/// characteristic polynomial has only real roots; throws otherwise.
AlgebraicReal real_spectral_radius(const RatMatrix& m);

/// (lambda_1, lambda_2, lambda_3) for the composition of reflections in n
/// general points of a cubic fourfold: (1,1,1) for n <= 2, (2^n,2^n,2^n)
/// from n = 3 on.
std::vector<AlgebraicReal> degree_tuple_generic(int n);

}  // namespace refdyn
