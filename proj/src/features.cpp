#include "linclass/features.hpp"

#include <iostream>

namespace linclass {

BasisSpec BasisSpec::polynomial(int degree) {
    if (degree < 1) throw DegreeZero("polynomial basis needs degree >= 1");
    return BasisSpec(Kind::Polynomial, degree, 1);
}

BasisSpec BasisSpec::linear2d() { return BasisSpec(Kind::Linear2D, 0, 2); }

BasisSpec BasisSpec::quad2d() { return BasisSpec(Kind::QuadraticLift2D, 0, 2); }

BasisSpec BasisSpec::raw(std::size_t dim) {
    if (dim < 1) throw OutOfRange("raw basis needs dim >= 1");
    return BasisSpec(Kind::Raw, 0, dim);
}

std::size_t BasisSpec::column_count() const {
    switch (kind_) {
        case Kind::Polynomial: return static_cast<std::size_t>(degree_);
        case Kind::Linear2D: return 3;
        case Kind::QuadraticLift2D: return 6;
        case Kind::Raw: return raw_dim_;
    }
    return 0;
}

std::size_t BasisSpec::raw_dim() const { return raw_dim_; }

std::string BasisSpec::name() const {
    switch (kind_) {
        case Kind::Polynomial: return "poly:" + std::to_string(degree_);
        case Kind::Linear2D: return "linear2d";
        case Kind::QuadraticLift2D: return "quad2d";
        case Kind::Raw: return "raw:" + std::to_string(raw_dim_);
    }
    return "";
}

BasisSpec BasisSpec::parse(const std::string& name) {
    if (name == "linear2d") return linear2d();
    if (name == "quad2d") return quad2d();
    if (name.rfind("poly:", 0) == 0) {
        try {
            return polynomial(std::stoi(name.substr(5)));
        } catch (const DegreeZero&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad polynomial basis '" + name + "'");
        }
    }
    if (name.rfind("raw:", 0) == 0) {
        try {
            return raw(static_cast<std::size_t>(std::stoul(name.substr(4))));
        } catch (const OutOfRange&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad raw basis '" + name + "'");
        }
    }
    throw ParseError("unknown basis '" + name + "' (expected linear2d, quad2d, poly:<d> or raw:<d>)");
}

DesignMatrix polynomial_design(const Vector& xs, int degree) {
    if (degree < 1) throw DegreeZero("polynomial_design: degree must be >= 1");
    ensure_finite(xs, "polynomial_design");
    const std::size_t n = xs.size();
    if (n < static_cast<std::size_t>(degree)) {
        std::cerr << "polynomial_design: only " << n << " points for " << degree
                  << " basis functions; system will be rank deficient\n";
    }
    DenseMatrix m(n, static_cast<std::size_t>(degree));
    for (std::size_t i = 0; i < n; ++i) {
        double p = 1.0;
        for (int j = 0; j < degree; ++j) {
            m(i, static_cast<std::size_t>(j)) = p;
            p *= xs[i];
        }
    }
    return DesignMatrix{std::move(m), BasisSpec::polynomial(degree), 1};
}

DesignMatrix linear2d_design(const std::vector<Point2>& points) {
    if (points.empty()) throw DimensionMismatch("linear2d_design: no points");
    DenseMatrix m(points.size(), 3);
    for (std::size_t i = 0; i < points.size(); ++i) {
        m(i, 0) = 1.0;
        m(i, 1) = points[i].x;
        m(i, 2) = points[i].y;
    }
    ensure_finite(m, "linear2d_design");
    return DesignMatrix{std::move(m), BasisSpec::linear2d(), 2};
}

DesignMatrix quadratic_lift(const std::vector<Point2>& points) {
    if (points.empty()) throw DimensionMismatch("quadratic_lift: no points");
    DenseMatrix m(points.size(), 6);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double x1 = points[i].x;
        const double x2 = points[i].y;
        m(i, 0) = 1.0;
        m(i, 1) = x1;
        m(i, 2) = x2;
        m(i, 3) = x1 * x1;
        m(i, 4) = x1 * x2;
        m(i, 5) = x2 * x2;
    }
    ensure_finite(m, "quadratic_lift");
    return DesignMatrix{std::move(m), BasisSpec::quad2d(), 2};
}

Vector features_for(const BasisSpec& basis, const Vector& raw_point) {
    if (raw_point.size() != basis.raw_dim()) {
        throw DimensionMismatch("features_for: point has " + std::to_string(raw_point.size()) +
                                " coordinates, basis expects " + std::to_string(basis.raw_dim()));
    }
    ensure_finite(raw_point, "features_for");
    switch (basis.kind()) {
        case BasisSpec::Kind::Polynomial: {
            Vector row(basis.column_count());
            double p = 1.0;
            for (std::size_t j = 0; j < row.size(); ++j) {
                row[j] = p;
                p *= raw_point[0];
            }
            return row;
        }
        case BasisSpec::Kind::Linear2D:
            return {1.0, raw_point[0], raw_point[1]};
        case BasisSpec::Kind::QuadraticLift2D: {
            const double x1 = raw_point[0];
            const double x2 = raw_point[1];
            return {1.0, x1, x2, x1 * x1, x1 * x2, x2 * x2};
        }
        case BasisSpec::Kind::Raw:
            return raw_point;
    }
    throw Error("features_for: unreachable");
}

DesignMatrix build_design(const BasisSpec& basis, const DenseMatrix& raw) {
    if (raw.rows() == 0) throw DimensionMismatch("build_design: no rows");
    if (raw.cols() < basis.raw_dim()) {
        throw DimensionMismatch("build_design: raw data has " + std::to_string(raw.cols()) +
                                " columns, basis needs " + std::to_string(basis.raw_dim()));
    }
    switch (basis.kind()) {
        case BasisSpec::Kind::Polynomial: {
            Vector xs(raw.rows());
            for (std::size_t i = 0; i < raw.rows(); ++i) xs[i] = raw(i, 0);
            return polynomial_design(xs, basis.degree());
        }
        case BasisSpec::Kind::Linear2D:
        case BasisSpec::Kind::QuadraticLift2D: {
            std::vector<Point2> pts(raw.rows());
            for (std::size_t i = 0; i < raw.rows(); ++i) pts[i] = {raw(i, 0), raw(i, 1)};
            return basis.kind() == BasisSpec::Kind::Linear2D ? linear2d_design(pts)
                                                             : quadratic_lift(pts);
        }
        case BasisSpec::Kind::Raw: {
            DenseMatrix m(raw.rows(), basis.raw_dim());
            for (std::size_t i = 0; i < raw.rows(); ++i)
                for (std::size_t j = 0; j < basis.raw_dim(); ++j) m(i, j) = raw(i, j);
            ensure_finite(m, "build_design");
            return DesignMatrix{std::move(m), basis, basis.raw_dim()};
        }
    }
    throw Error("build_design: unreachable");
}

}  // namespace linclass
