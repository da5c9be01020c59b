#ifndef TAPN_NET_FORMAT_H
#define TAPN_NET_FORMAT_H

#include <filesystem>
#include <string>
#include <string_view>

#include "tapn/concrete.h"
#include "tapn/interval.h"
#include "tapn/net.h"

namespace tapn {

/// "[a,b]", "(a,b]", "[a,b)", "(a,b)", "[a,inf)", "(a,inf)". Throws ParseError
/// with the given line and the column of the offending character.
TimeInterval parse_interval(std::string_view text, int line = 0, int column = 1);

/// An interval, or the shorthand "<c" for [0,c) and "<=c" for [0,c].
TimeInterval parse_invariant(std::string_view text, int line = 0, int column = 1);

/// Reads the line-oriented net format:
///
///   net NAME
///   bound K
///   places
///     NAME [inv INVARIANT]
///   transitions
///     NAME
///   arcs
///     PLACE -> TRANSITION [INTERVAL] [normal|inhibitor|transport:G]
///     TRANSITION -> PLACE [normal|transport:G]
///   marking
///     PLACE [COUNT]
///
/// '#' starts a comment. Throws ParseError.
NetDescription parse_net(std::string_view text);

struct LoadedNet {
    TimedArcPetriNet net;
    ConcreteMarking initial;
};

/// Parses and validates a net file. Throws ParseError or NetError.
LoadedNet load_net(const std::filesystem::path& path);
LoadedNet load_net_text(std::string_view text);

/// Text that parse_net() reads back into describe(net).
std::string render_net(const TimedArcPetriNet& net);
std::string render_net(const NetDescription& net);

} // namespace tapn

#endif
