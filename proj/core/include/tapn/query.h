#ifndef TAPN_QUERY_H
#define TAPN_QUERY_H

#include <concepts>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tapn/error.h"
#include "tapn/net.h"

namespace tapn {

enum class Relation { Less, LessEq, Equal, NotEqual, GreaterEq, Greater };
enum class Quantifier { EF, AG };

const char* to_string(Relation rel);
Relation complement(Relation rel);

/// Boolean combination of token-count atoms "place REL n". There is no
/// negation node; negate() pushes negation into the atoms.
struct Predicate {
    enum class Kind { Atom, And, Or };

    Kind kind = Kind::Atom;
    std::string place;
    Relation relation = Relation::GreaterEq;
    std::int64_t value = 0;
    /// Filled by bind(); evaluation falls back to name lookup otherwise.
    std::optional<PlaceId> place_id;
    std::vector<Predicate> children;

    static Predicate atom(std::string place, Relation rel, std::int64_t n);
    static Predicate conjunction(Predicate lhs, Predicate rhs);
    static Predicate disjunction(Predicate lhs, Predicate rhs);

    friend bool operator==(const Predicate& a, const Predicate& b);
};

struct Query {
    Quantifier quantifier = Quantifier::EF;
    Predicate body;
};

class QueryError : public ParseError {
public:
    enum class Kind { Syntax, UnknownRelation };
    QueryError(Kind kind, const std::string& what, int column)
        : ParseError(what, 0, column), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class UnknownPlaceError : public Error {
public:
    explicit UnknownPlaceError(const std::string& place)
        : Error("unknown place in query: " + place), place_(place) {}
    const std::string& place() const noexcept { return place_; }

private:
    std::string place_;
};

/// query := ("EF" | "AG") pred
/// pred  := pred ("and" | "&&") pred | pred ("or" | "||") pred
///        | "(" pred ")" | IDENT REL NAT
/// "and" binds tighter than "or"; both are left-associative.
Query parse_query(std::string_view text);
Predicate parse_predicate(std::string_view text);

/// Resolves place names to ids. Throws UnknownPlaceError.
Predicate bind(const Predicate& pred, const TimedArcPetriNet& net);

/// Evaluates on the placement only; ages never matter.
bool eval_predicate(const TimedArcPetriNet& net, const Placement& placement, const Predicate& pred);

template <class Marking>
    requires requires(const Marking& m) {
        { m.placement } -> std::convertible_to<const Placement&>;
    }
bool eval_predicate(const TimedArcPetriNet& net, const Marking& m, const Predicate& pred) {
    return eval_predicate(net, m.placement, pred);
}

/// Negation normal form of the complement, still inside the grammar.
Predicate negate(const Predicate& pred);

struct SearchGoal {
    Predicate body;
    /// The answer for the original query is the negation of "body reachable".
    bool flip = false;
};

/// EF p searches for p; AG p searches for the negation of p and flips.
SearchGoal dualize(const Query& q);

/// Places constrained from above or exactly (<, <=, =, !=).
std::set<std::string> monotonicity_breaking_places(const Predicate& pred);

std::string to_string(const Predicate& pred);
std::string to_string(const Query& q);

} // namespace tapn

#endif
