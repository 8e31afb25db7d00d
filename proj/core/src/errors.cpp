#include "hyperavg/errors.hpp"

namespace hyperavg {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty_edge: return "EmptyEdge";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::duplicate_vertex_in_edge: return "DuplicateVertexInEdge";
    case Errc::same_vertex: return "SameVertex";
    case Errc::no_edges: return "NoEdges";
    case Errc::too_few_vertices: return "TooFewVertices";
    case Errc::non_integral_count: return "NonIntegralCount";
    case Errc::isolated_vertex: return "IsolatedVertex";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::overflow: return "Overflow";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::spectral_connectivity_mismatch: return "SpectralConnectivityMismatch";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::disconnected: return "Disconnected";
    case Errc::not_regular: return "NotRegular";
    case Errc::degenerate_rate: return "DegenerateRate";
    case Errc::not_codegree_regular: return "NotCodegreeRegular";
    case Errc::not_uniform: return "NotUniform";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_builtin: return "UnknownBuiltin";
  }
  return "UnknownError";
}

}  // namespace hyperavg
