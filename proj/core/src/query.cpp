#include "tapn/query.h"

#include <cctype>

namespace tapn {

const char* to_string(Relation rel) {
    switch (rel) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::NotEqual: return "!=";
    case Relation::GreaterEq: return ">=";
    case Relation::Greater: return ">";
    }
    return "?";
}

Relation complement(Relation rel) {
    switch (rel) {
    case Relation::Less: return Relation::GreaterEq;
    case Relation::LessEq: return Relation::Greater;
    case Relation::Equal: return Relation::NotEqual;
    case Relation::NotEqual: return Relation::Equal;
    case Relation::GreaterEq: return Relation::Less;
    case Relation::Greater: return Relation::LessEq;
    }
    return rel;
}

Predicate Predicate::atom(std::string place, Relation rel, std::int64_t n) {
    Predicate p;
    p.kind = Kind::Atom;
    p.place = std::move(place);
    p.relation = rel;
    p.value = n;
    return p;
}

Predicate Predicate::conjunction(Predicate lhs, Predicate rhs) {
    Predicate p;
    p.kind = Kind::And;
    p.children.push_back(std::move(lhs));
    p.children.push_back(std::move(rhs));
    return p;
}

Predicate Predicate::disjunction(Predicate lhs, Predicate rhs) {
    Predicate p;
    p.kind = Kind::Or;
    p.children.push_back(std::move(lhs));
    p.children.push_back(std::move(rhs));
    return p;
}

bool operator==(const Predicate& a, const Predicate& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Predicate::Kind::Atom) {
        return a.place == b.place && a.relation == b.relation && a.value == b.value;
    }
    return a.children == b.children;
}

namespace {

enum class Tok { Ident, Number, Rel, And, Or, LParen, RParen, End };

struct Token {
    Tok type;
    std::string text;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const int column = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) return {Tok::End, "", column};
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_' || text_[pos_] == '.')) {
                ++pos_;
            }
            std::string word(text_.substr(start, pos_ - start));
            if (word == "and") return {Tok::And, word, column};
            if (word == "or") return {Tok::Or, word, column};
            return {Tok::Ident, word, column};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return {Tok::Number, std::string(text_.substr(start, pos_ - start)), column};
        }
        if (c == '(' || c == ')') {
            ++pos_;
            return {c == '(' ? Tok::LParen : Tok::RParen, std::string(1, c), column};
        }
        if ((c == '&' || c == '|') && pos_ + 1 < text_.size() && text_[pos_ + 1] == c) {
            pos_ += 2;
            return {c == '&' ? Tok::And : Tok::Or, std::string(2, c), column};
        }
        if (c == '<' || c == '>' || c == '=' || c == '!') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::string_view("<>=!").find(text_[pos_]) != std::string_view::npos) {
                ++pos_;
            }
            return {Tok::Rel, std::string(text_.substr(start, pos_ - start)), column};
        }
        throw QueryError(QueryError::Kind::Syntax, std::string("unexpected character '") + c + "'", column);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Query query() {
        if (current_.type != Tok::Ident || (current_.text != "EF" && current_.text != "AG")) {
            fail("expected EF or AG");
        }
        Query q;
        q.quantifier = current_.text == "EF" ? Quantifier::EF : Quantifier::AG;
        advance();
        q.body = disjunction();
        expect_end();
        return q;
    }

    Predicate predicate_only() {
        Predicate p = disjunction();
        expect_end();
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        const std::string found = current_.type == Tok::End ? "end of input" : "'" + current_.text + "'";
        throw QueryError(QueryError::Kind::Syntax, what + ", found " + found, current_.column);
    }

    void advance() { current_ = lexer_.next(); }

    void expect_end() {
        if (current_.type != Tok::End) fail("expected end of query");
    }

    Predicate disjunction() {
        Predicate lhs = conjunction();
        while (current_.type == Tok::Or) {
            advance();
            lhs = Predicate::disjunction(std::move(lhs), conjunction());
        }
        return lhs;
    }

    Predicate conjunction() {
        Predicate lhs = primary();
        while (current_.type == Tok::And) {
            advance();
            lhs = Predicate::conjunction(std::move(lhs), primary());
        }
        return lhs;
    }

    Predicate primary() {
        if (current_.type == Tok::LParen) {
            advance();
            Predicate inner = disjunction();
            if (current_.type != Tok::RParen) fail("expected ')'");
            advance();
            return inner;
        }
        if (current_.type != Tok::Ident) fail("expected place name or '('");
        std::string place = current_.text;
        advance();
        if (current_.type != Tok::Rel) fail("expected relation");
        const Relation rel = relation(current_);
        advance();
        if (current_.type != Tok::Number) fail("expected natural number");
        std::int64_t n = 0;
        try {
            n = std::stoll(current_.text);
        } catch (const std::out_of_range&) {
            fail("number out of range");
        }
        advance();
        return Predicate::atom(std::move(place), rel, n);
    }

    static Relation relation(const Token& tok) {
        const std::string& r = tok.text;
        if (r == "<") return Relation::Less;
        if (r == "<=") return Relation::LessEq;
        if (r == "=" || r == "==") return Relation::Equal;
        if (r == "!=") return Relation::NotEqual;
        if (r == ">=") return Relation::GreaterEq;
        if (r == ">") return Relation::Greater;
        throw QueryError(QueryError::Kind::UnknownRelation, "unknown relation '" + r + "'", tok.column);
    }

    Lexer lexer_;
    Token current_{Tok::End, "", 0};
};

bool compare(std::int64_t lhs, Relation rel, std::int64_t rhs) {
    switch (rel) {
    case Relation::Less: return lhs < rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::NotEqual: return lhs != rhs;
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Greater: return lhs > rhs;
    }
    return false;
}

void collect_breaking(const Predicate& pred, std::set<std::string>& out) {
    if (pred.kind != Predicate::Kind::Atom) {
        for (const auto& c : pred.children) collect_breaking(c, out);
        return;
    }
    if (pred.relation != Relation::GreaterEq && pred.relation != Relation::Greater) {
        out.insert(pred.place);
    }
}

} // namespace

Query parse_query(std::string_view text) { return Parser(text).query(); }

Predicate parse_predicate(std::string_view text) { return Parser(text).predicate_only(); }

Predicate bind(const Predicate& pred, const TimedArcPetriNet& net) {
    Predicate out = pred;
    if (out.kind == Predicate::Kind::Atom) {
        const auto id = net.find_place(out.place);
        if (!id) throw UnknownPlaceError(out.place);
        out.place_id = *id;
        return out;
    }
    for (auto& c : out.children) c = bind(c, net);
    return out;
}

bool eval_predicate(const TimedArcPetriNet& net, const Placement& placement, const Predicate& pred) {
    switch (pred.kind) {
    case Predicate::Kind::Atom: {
        PlaceId p = 0;
        if (pred.place_id) {
            p = *pred.place_id;
        } else {
            const auto id = net.find_place(pred.place);
            if (!id) throw UnknownPlaceError(pred.place);
            p = *id;
        }
        return compare(count_tokens(placement, p), pred.relation, pred.value);
    }
    case Predicate::Kind::And:
        for (const auto& c : pred.children) {
            if (!eval_predicate(net, placement, c)) return false;
        }
        return true;
    case Predicate::Kind::Or:
        for (const auto& c : pred.children) {
            if (eval_predicate(net, placement, c)) return true;
        }
        return false;
    }
    return false;
}

Predicate negate(const Predicate& pred) {
    Predicate out = pred;
    switch (pred.kind) {
    case Predicate::Kind::Atom:
        out.relation = complement(pred.relation);
        return out;
    case Predicate::Kind::And:
        out.kind = Predicate::Kind::Or;
        break;
    case Predicate::Kind::Or:
        out.kind = Predicate::Kind::And;
        break;
    }
    for (auto& c : out.children) c = negate(c);
    return out;
}

SearchGoal dualize(const Query& q) {
    if (q.quantifier == Quantifier::EF) return {q.body, false};
    return {negate(q.body), true};
}

std::set<std::string> monotonicity_breaking_places(const Predicate& pred) {
    std::set<std::string> out;
    collect_breaking(pred, out);
    return out;
}

std::string to_string(const Predicate& pred) {
    switch (pred.kind) {
    case Predicate::Kind::Atom:
        return pred.place + " " + to_string(pred.relation) + " " + std::to_string(pred.value);
    case Predicate::Kind::And:
    case Predicate::Kind::Or: {
        const char* op = pred.kind == Predicate::Kind::And ? " and " : " or ";
        std::string out;
        for (std::size_t i = 0; i < pred.children.size(); ++i) {
            if (i) out += op;
            const auto& c = pred.children[i];
            const bool wrap = c.kind != Predicate::Kind::Atom && c.kind != pred.kind;
            out += wrap ? "(" + to_string(c) + ")" : to_string(c);
        }
        return out;
    }
    }
    return {};
}

std::string to_string(const Query& q) {
    return std::string(q.quantifier == Quantifier::EF ? "EF " : "AG ") + to_string(q.body);
}

} // namespace tapn
