#include "corona/errors.hpp"

namespace corona {

const char* errc_name(errc code) {
    switch (code) {
        case errc::out_of_range: return "OutOfRange";
        case errc::loop_edge: return "LoopEdge";
        case errc::malformed_graph6: return "MalformedGraph6";
        case errc::malformed_edge_list: return "MalformedEdgeList";
        case errc::bad_family_params: return "BadFamilyParams";
        case errc::non_square: return "NonSquare";
        case errc::zero_denominator: return "ZeroDenominator";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::complex_roots: return "ComplexRoots";
        case errc::degenerate_leading_coefficient: return "DegenerateLeadingCoefficient";
        case errc::non_symmetric: return "NonSymmetric";
        case errc::empty_graph: return "EmptyGraph";
        case errc::not_regular: return "NotRegular";
        case errc::disconnected: return "Disconnected";
        case errc::rounding_guard_violated: return "RoundingGuardViolated";
        case errc::hypothesis_violated: return "HypothesisViolated";
    }
    return "UnknownError";
}

}  // namespace corona
