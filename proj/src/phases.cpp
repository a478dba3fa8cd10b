#include "szsim/phases.hpp"

namespace szsim {

PhaseConfig::PhaseConfig(RealVector apr_in, RealMatrix link_in)
    : apr(std::move(apr_in)), link(std::move(link_in)) {
    const auto n = apr.size();
    if (link.rows() != n || link.cols() != n) {
        throw DimensionMismatch("PhaseConfig: apr has " + std::to_string(n) +
                                " entries but link is " + std::to_string(link.rows()) + "x" +
                                std::to_string(link.cols()));
    }
    apr = apr.unaryExpr([](double a) { return reduce_angle(a); });
    link = link.unaryExpr([](double a) { return reduce_angle(a); });
}

PhaseConfig PhaseConfig::standard(int n) {
    return PhaseConfig(RealVector::Constant(n, kPi), RealMatrix::Zero(n, n));
}

PhaseConfig PhaseConfig::with_apr(RealVector apr_in) {
    const auto n = apr_in.size();
    return PhaseConfig(std::move(apr_in), RealMatrix::Zero(n, n));
}

}  // namespace szsim
