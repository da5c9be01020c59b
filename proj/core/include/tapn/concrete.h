#ifndef TAPN_CONCRETE_H
#define TAPN_CONCRETE_H

#include <optional>
#include <vector>

#include "tapn/error.h"
#include "tapn/net.h"
#include "tapn/rational.h"

namespace tapn {

/// A placement plus an exact age per token. Tokens in ⊥ have age 0.
struct ConcreteMarking {
    Placement placement;
    std::vector<Rational> ages;

    /// Rejects markings whose ages violate a place invariant.
    static ConcreteMarking make(const TimedArcPetriNet& net, Placement placement,
                                std::vector<Rational> ages);
    /// The net's initial placement with every age 0.
    static ConcreteMarking initial(const TimedArcPetriNet& net);

    friend bool operator==(const ConcreteMarking&, const ConcreteMarking&) = default;
};

class NotEnabledError : public SemanticsError {
public:
    using SemanticsError::SemanticsError;
};

class InvariantViolation : public SemanticsError {
public:
    InvariantViolation(int token, const std::string& what) : SemanticsError(what), token_(token) {}
    /// 0-based token index.
    int token() const noexcept { return token_; }

private:
    int token_;
};

/// Whether t is enabled in m by the tokens of `binding`.
bool is_enabled(const TimedArcPetriNet& net, const ConcreteMarking& m, TransitionId t,
                const TokenBinding& binding);

/// Every binding enabling t in m. ⊥ entries take every combination of ⊥
/// tokens, assigned to the ⊥ entries in increasing token order.
std::vector<TokenBinding> enabled_token_sets(const TimedArcPetriNet& net, const ConcreteMarking& m,
                                             TransitionId t);

/// Throws NotEnabledError.
ConcreteMarking fire(const TimedArcPetriNet& net, const ConcreteMarking& m, TransitionId t,
                     const TokenBinding& binding);

/// Throws InvariantViolation naming the first token that breaks its invariant.
ConcreteMarking delay(const TimedArcPetriNet& net, const ConcreteMarking& m, const Rational& d);

/// Largest delay allowed by the invariants, or nullopt when unbounded. The
/// bool is true when that supremum is itself allowed.
struct DelayBound {
    std::optional<Rational> supremum;
    bool attained = false;
};
DelayBound max_delay(const TimedArcPetriNet& net, const ConcreteMarking& m);

} // namespace tapn

#endif
