#pragma once

// Design-matrix construction: polynomial (Vandermonde) basis, the 2-D linear
// basis (1, x, y), and the quadratic feature lift (1, x1, x2, x1^2, x1*x2, x2^2).

#include <cstddef>
#include <string>
#include <vector>

#include "linclass/linalg.hpp"

namespace linclass {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Which basis maps raw inputs to feature rows. Weight layout is bias-first
// everywhere; the basis name doubles as the serialization tag.
//
// Raw is a passthrough (no bias column): multiplicative learners such as
// WINNOW cannot emit class 0 once a constant positive column is present,
// so they train on the attributes as given.
class BasisSpec {
public:
    enum class Kind { Polynomial, Linear2D, QuadraticLift2D, Raw };

    static BasisSpec polynomial(int degree);  // degree = number of basis functions
    static BasisSpec linear2d();
    static BasisSpec quad2d();
    static BasisSpec raw(std::size_t dim);

    Kind kind() const { return kind_; }
    int degree() const { return degree_; }

    // Number of feature columns the basis produces.
    std::size_t column_count() const;
    // Number of raw input coordinates consumed per data point.
    std::size_t raw_dim() const;

    // "poly:<d>", "linear2d", "quad2d", "raw:<d>".
    std::string name() const;
    static BasisSpec parse(const std::string& name);

    bool operator==(const BasisSpec& other) const = default;

private:
    BasisSpec(Kind kind, int degree, std::size_t raw_dim)
        : kind_(kind), degree_(degree), raw_dim_(raw_dim) {}

    Kind kind_ = Kind::Linear2D;
    int degree_ = 0;        // Polynomial only
    std::size_t raw_dim_ = 2;
};

struct DesignMatrix {
    DenseMatrix matrix;       // N x column_count()
    BasisSpec basis = BasisSpec::linear2d();
    std::size_t raw_dim = 2;  // raw coordinates per row
};

// Entry (i, j) = xs[i]^j for j = 0..degree-1. Warns to stderr when there are
// fewer points than basis functions; throws DegreeZero for degree < 1.
DesignMatrix polynomial_design(const Vector& xs, int degree);

// Row i = (1, x_i, y_i).
DesignMatrix linear2d_design(const std::vector<Point2>& points);

// Row i = (1, x1, x2, x1^2, x1*x2, x2^2).
DesignMatrix quadratic_lift(const std::vector<Point2>& points);

// Feature row for one raw point under the given basis.
Vector features_for(const BasisSpec& basis, const Vector& raw_point);

// Dispatch on basis kind; raw is an N x raw_dim matrix of input coordinates
// (polynomial uses column 0).
DesignMatrix build_design(const BasisSpec& basis, const DenseMatrix& raw);

}  // namespace linclass
