#ifndef CUTFACET_IO_HPP
#define CUTFACET_IO_HPP

#include "cutfacet/gh_pair.hpp"
#include "cutfacet/inequality.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace cutfacet {

struct Instance {
    GHPair pair;
    std::optional<Cycle4> cycle;
};

/// Line-oriented, '#' starts a comment. Header is one of
///   cutform N          (K_N; `edge U V` lines restrict the support graph)
///   corform NL NR      (K_{NL,NR}, left side 1..NL)
///   corgraph N         (correlation form on the `edge U V` lines)
/// followed by `rhs R`, `term U V C` and `nterm U C` lines. Unlisted terms
/// are zero. Throws ParseError.
LinearInequality parse_inequality(std::string_view text);

/// Canonical text: header, edges (if needed), rhs, nterms, terms; nonzero
/// coefficients only, in node and edge order.
std::string serialize_inequality(const LinearInequality& ineq);

/// `nodes N`, `gedge U V`, `hedge U V`, optional `cycle A B C D`.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

} // namespace cutfacet

#endif
