#ifndef SDGRAPH_TOOLS_RENDER_HPP_
#define SDGRAPH_TOOLS_RENDER_HPP_

// Plain-text renderings used by the `text` output format.

#include <ostream>
#include <string>

#include "sdgraph/configurations.hpp"
#include "sdgraph/verification.hpp"

namespace sdgraph::cli {

std::string set_text(VertexSet s);
std::string sequence_text(const VertexSequence& s);
std::string matching_text(const Matching& m);
std::string describe(const Configuration& c);

void print_verification(std::ostream& out, const VerificationReport& r);
void print_conjecture(std::ostream& out, const ConjectureReport& r,
                      bool list_all);

}  // namespace sdgraph::cli

#endif  // SDGRAPH_TOOLS_RENDER_HPP_
