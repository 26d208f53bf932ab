#ifndef IDENTGB_SYSIO_HPP
#define IDENTGB_SYSIO_HPP

#include "identgb/sysgen.hpp"

#include <memory>
#include <string>
#include <vector>

namespace identgb {

/// A polynomial system read from the text format. Variables keep the
/// header order, which is also the ordering rank the file was written
/// under (most significant first).
struct TextSystem {
    std::string name;
    std::uint32_t prime = 0;
    std::vector<VarInfo> vars;
    std::shared_ptr<MonomialPool> pool;
    std::vector<FpPoly> polynomials; ///< normalized under degrevlex over the header rank
};

/// Text format: `# prime: <p>` and `# variables: <name, ...>` header lines
/// (variables listed most significant first), then one polynomial per line
/// in expanded form with coefficients in [1, p).
std::string emit_system(const SpecializedSystem& sys);

TextSystem parse_system(const std::string& text);

std::string print_fppoly(const FpPoly& f, const MonomialPool& pool, const std::vector<VarInfo>& vars,
                         const MonomialOrdering& ord);

/// Weights file: one `<name> <weight>` per line, `#` comments.
std::vector<std::uint32_t> parse_weights_file(const std::string& text, const std::vector<VarInfo>& vars);

} // namespace identgb

#endif
