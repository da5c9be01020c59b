#include "tapn/concrete.h"

#include <algorithm>

namespace tapn {

ConcreteMarking ConcreteMarking::make(const TimedArcPetriNet& net, Placement placement,
                                      std::vector<Rational> ages) {
    if (placement.size() != ages.size()) throw SemanticsError("placement and ages differ in size");
    for (std::size_t i = 0; i < placement.size(); ++i) {
        if (placement[i] == kBottom) {
            ages[i] = 0;
            continue;
        }
        if (ages[i] < 0 || !net.invariant(placement[i]).contains(ages[i])) {
            throw InvariantViolation(static_cast<int>(i),
                                     "token " + std::to_string(i + 1) + " of age " +
                                         to_string(ages[i]) + " violates the invariant of " +
                                         net.place_name(placement[i]));
        }
    }
    return {std::move(placement), std::move(ages)};
}

ConcreteMarking ConcreteMarking::initial(const TimedArcPetriNet& net) {
    return {net.initial_placement(), std::vector<Rational>(net.initial_placement().size(), Rational(0))};
}

bool is_enabled(const TimedArcPetriNet& net, const ConcreteMarking& m, TransitionId t,
                const TokenBinding& binding) {
    const Transition& tr = net.transition(t);
    if (binding.size() != tr.pairing.size()) return false;
    const int k = static_cast<int>(m.placement.size());
    std::vector<char> used(m.placement.size(), 0);
    for (std::size_t j = 0; j < binding.size(); ++j) {
        const int token = binding[j];
        if (token < 0 || token >= k || used[static_cast<std::size_t>(token)]) return false;
        used[static_cast<std::size_t>(token)] = 1;
        const auto& entry = tr.pairing[j];
        if (m.placement[static_cast<std::size_t>(token)] != entry.source) return false;
        const Rational& age = m.ages[static_cast<std::size_t>(token)];
        if (entry.input_arc && !net.input_arcs()[*entry.input_arc].interval.contains(age)) return false;
        if (entry.transport && !net.invariant(entry.target).contains(age)) return false;
    }
    for (std::size_t i = 0; i < m.placement.size(); ++i) {
        if (used[i]) continue;
        const PlaceId p = m.placement[i];
        if (std::find(tr.inhibitors.begin(), tr.inhibitors.end(), p) != tr.inhibitors.end()) {
            return false;
        }
    }
    return true;
}

namespace {

void choose_bottom(const std::vector<int>& pool, std::size_t need, std::size_t start,
                   std::vector<int>& chosen, std::vector<std::vector<int>>& out) {
    if (chosen.size() == need) {
        out.push_back(chosen);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        chosen.push_back(pool[i]);
        choose_bottom(pool, need, i + 1, chosen, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<TokenBinding> enabled_token_sets(const TimedArcPetriNet& net, const ConcreteMarking& m,
                                             TransitionId t) {
    const Transition& tr = net.transition(t);
    std::vector<std::vector<int>> per_entry(tr.pairing.size());
    std::vector<int> bottom_pool;
    for (std::size_t i = 0; i < m.placement.size(); ++i) {
        if (m.placement[i] == kBottom) bottom_pool.push_back(static_cast<int>(i));
    }
    std::vector<std::size_t> bottom_entries;
    for (std::size_t j = 0; j < tr.pairing.size(); ++j) {
        if (tr.pairing[j].source == kBottom) {
            bottom_entries.push_back(j);
            continue;
        }
        for (std::size_t i = 0; i < m.placement.size(); ++i) {
            if (m.placement[i] == tr.pairing[j].source) per_entry[j].push_back(static_cast<int>(i));
        }
        if (per_entry[j].empty()) return {};
    }
    std::vector<std::vector<int>> bottom_choices;
    std::vector<int> scratch;
    choose_bottom(bottom_pool, bottom_entries.size(), 0, scratch, bottom_choices);

    std::vector<TokenBinding> result;
    TokenBinding binding(tr.pairing.size(), -1);
    // Odometer over the non-⊥ entries.
    std::vector<std::size_t> cursor(tr.pairing.size(), 0);
    while (true) {
        for (std::size_t j = 0; j < tr.pairing.size(); ++j) {
            if (tr.pairing[j].source != kBottom) binding[j] = per_entry[j][cursor[j]];
        }
        for (const auto& choice : bottom_choices) {
            for (std::size_t b = 0; b < bottom_entries.size(); ++b) binding[bottom_entries[b]] = choice[b];
            if (is_enabled(net, m, t, binding)) result.push_back(binding);
        }
        std::size_t j = 0;
        for (; j < tr.pairing.size(); ++j) {
            if (tr.pairing[j].source == kBottom) continue;
            if (++cursor[j] < per_entry[j].size()) break;
            cursor[j] = 0;
        }
        if (j == tr.pairing.size()) break;
    }
    return result;
}

ConcreteMarking fire(const TimedArcPetriNet& net, const ConcreteMarking& m, TransitionId t,
                     const TokenBinding& binding) {
    if (!is_enabled(net, m, t, binding)) {
        throw NotEnabledError("transition " + net.transition(t).name +
                              " is not enabled by the given tokens");
    }
    ConcreteMarking out{move_tokens(net, m.placement, t, binding), m.ages};
    const auto& pairing = net.transition(t).pairing;
    for (std::size_t j = 0; j < pairing.size(); ++j) {
        if (!pairing[j].transport) out.ages[static_cast<std::size_t>(binding[j])] = 0;
    }
    return out;
}

ConcreteMarking delay(const TimedArcPetriNet& net, const ConcreteMarking& m, const Rational& d) {
    if (d < 0) throw SemanticsError("negative delay");
    ConcreteMarking out = m;
    for (std::size_t i = 0; i < m.placement.size(); ++i) {
        if (m.placement[i] == kBottom) continue;
        out.ages[i] += d;
        if (!net.invariant(m.placement[i]).contains(out.ages[i])) {
            throw InvariantViolation(static_cast<int>(i),
                                     "delay " + to_string(d) + " breaks the invariant of token " +
                                         std::to_string(i + 1) + " in " +
                                         net.place_name(m.placement[i]));
        }
    }
    return out;
}

DelayBound max_delay(const TimedArcPetriNet& net, const ConcreteMarking& m) {
    DelayBound bound;
    for (std::size_t i = 0; i < m.placement.size(); ++i) {
        if (m.placement[i] == kBottom) continue;
        const TimeInterval inv = net.invariant(m.placement[i]);
        if (!inv.upper()) continue;
        const Rational room = Rational(*inv.upper()) - m.ages[i];
        const bool attained = !inv.upper_strict();
        if (!bound.supremum || room < *bound.supremum ||
            (room == *bound.supremum && !attained)) {
            bound.supremum = room;
            bound.attained = attained;
        }
    }
    return bound;
}

} // namespace tapn
