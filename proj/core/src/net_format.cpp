#include "tapn/net_format.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace tapn {

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') return false;
    }
    return true;
}

std::optional<std::int64_t> parse_natural(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) return std::nullopt;
    return v;
}

class IntervalReader {
public:
    IntervalReader(std::string_view text, int line, int column)
        : text_(text), line_(line), column_(column) {}

    TimeInterval read() {
        if (text_.empty()) fail("empty interval", 0);
        const char open = text_[0];
        if (open != '[' && open != '(') fail("interval must start with '[' or '('", 0);
        const char close = text_.back();
        if (close != ']' && close != ')') {
            fail("interval must end with ']' or ')'", text_.size() - 1);
        }
        const auto comma = text_.find(',');
        if (comma == std::string_view::npos) fail("missing ',' in interval", text_.size() - 1);
        const std::string_view lo = text_.substr(1, comma - 1);
        const std::string_view hi = text_.substr(comma + 1, text_.size() - comma - 2);
        const auto lower = parse_natural(lo);
        if (!lower) fail("bad lower bound '" + std::string(lo) + "'", 1);
        std::optional<std::int64_t> upper;
        if (hi != "inf") {
            upper = parse_natural(hi);
            if (!upper) fail("bad upper bound '" + std::string(hi) + "'", comma + 1);
        }
        try {
            return TimeInterval::make(*lower, open == '(', upper, close == ')');
        } catch (const std::invalid_argument& e) {
            fail(std::string(e.what()) + " in '" + std::string(text_) + "'", 0);
        }
    }

private:
    [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
        throw ParseError(what, line_, column_ + static_cast<int>(offset));
    }

    std::string_view text_;
    int line_;
    int column_;
};

enum class Section { None, Places, Transitions, Arcs, Marking };

class NetReader {
public:
    explicit NetReader(std::string_view text) : text_(text) {}

    NetDescription read() {
        std::size_t pos = 0;
        int line_no = 0;
        while (pos <= text_.size()) {
            const auto end = text_.find('\n', pos);
            const std::string_view line =
                text_.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
            ++line_no;
            line_ = line_no;
            handle(split(line));
            if (end == std::string_view::npos) break;
            pos = end + 1;
        }
        resolve_arcs();
        for (const auto& [name, count, line, column] : marking_) {
            auto it = std::find_if(desc_.places.begin(), desc_.places.end(),
                                   [&](const RawPlace& p) { return p.name == name; });
            if (it == desc_.places.end()) {
                throw ParseError("marking names unknown place '" + name + "'", line, column);
            }
            it->initial_tokens += count;
        }
        return desc_;
    }

private:
    struct PendingArc {
        std::vector<Token> tokens;
        int line;
    };
    struct MarkingLine {
        std::string place;
        int count;
        int line;
        int column;
    };

    [[noreturn]] void fail(const std::string& what, int column) const {
        throw ParseError(what, line_, column);
    }

    void expect_count(const std::vector<Token>& t, std::size_t n, const char* usage) const {
        if (t.size() != n) fail(std::string("expected '") + usage + "'", t.front().column);
    }

    void handle(const std::vector<Token>& t) {
        if (t.empty()) return;
        const std::string& head = t[0].text;
        if (head == "net") {
            expect_count(t, 2, "net NAME");
            desc_.name = t[1].text;
            return;
        }
        if (head == "bound") {
            expect_count(t, 2, "bound K");
            const auto k = parse_natural(t[1].text);
            if (!k || *k > 1'000'000) fail("bad bound '" + t[1].text + "'", t[1].column);
            desc_.bound = static_cast<int>(*k);
            return;
        }
        if (t.size() == 1) {
            if (head == "places") return set(Section::Places);
            if (head == "transitions") return set(Section::Transitions);
            if (head == "arcs") return set(Section::Arcs);
            if (head == "marking") return set(Section::Marking);
        }
        switch (section_) {
        case Section::None:
            fail("unexpected '" + head + "' outside a section", t[0].column);
        case Section::Places:
            return place(t);
        case Section::Transitions:
            expect_count(t, 1, "NAME");
            name_check(t[0]);
            desc_.transitions.push_back(head);
            return;
        case Section::Arcs:
            arcs_.push_back({t, line_});
            return;
        case Section::Marking: {
            if (t.size() > 2) fail("expected 'PLACE [COUNT]'", t[2].column);
            int count = 1;
            if (t.size() == 2) {
                const auto n = parse_natural(t[1].text);
                if (!n || *n > 1'000'000) fail("bad token count '" + t[1].text + "'", t[1].column);
                count = static_cast<int>(*n);
            }
            marking_.push_back({head, count, line_, t[0].column});
            return;
        }
        }
    }

    void set(Section s) { section_ = s; }

    void name_check(const Token& tok) const {
        if (!is_identifier(tok.text)) fail("bad name '" + tok.text + "'", tok.column);
    }

    void place(const std::vector<Token>& t) {
        name_check(t[0]);
        RawPlace p{t[0].text, TimeInterval::unbounded(), 0};
        if (t.size() == 3 && t[1].text == "inv") {
            p.invariant = parse_invariant(t[2].text, line_, t[2].column);
        } else if (t.size() != 1) {
            fail("expected 'NAME [inv INVARIANT]'", t[1].column);
        }
        desc_.places.push_back(std::move(p));
    }

    bool is_place(const std::string& name) const {
        for (const auto& p : desc_.places) {
            if (p.name == name) return true;
        }
        return false;
    }

    bool is_transition(const std::string& name) const {
        for (const auto& t : desc_.transitions) {
            if (t == name) return true;
        }
        return false;
    }

    // Kind token: normal | inhibitor | transport:G
    std::pair<ArcKind, int> kind(const Token& tok) const {
        if (tok.text == "normal") return {ArcKind::Normal, 0};
        if (tok.text == "inhibitor") return {ArcKind::Inhibitor, 0};
        if (tok.text.rfind("transport:", 0) == 0) {
            const auto g = parse_natural(std::string_view(tok.text).substr(10));
            if (!g || *g == 0 || *g > 1'000'000) {
                fail("transport group must be a positive integer", tok.column + 10);
            }
            return {ArcKind::Transport, static_cast<int>(*g)};
        }
        fail("unknown arc kind '" + tok.text + "'", tok.column);
    }

    void resolve_arcs() {
        for (const auto& [t, line] : arcs_) {
            line_ = line;
            if (t.size() < 3 || t[1].text != "->") fail("expected 'SOURCE -> TARGET ...'", t[0].column);
            const std::string& src = t[0].text;
            const std::string& dst = t[2].text;
            std::size_t i = 3;
            if (is_place(src)) {
                if (!is_transition(dst)) fail("unknown transition '" + dst + "'", t[2].column);
                RawInputArc arc{src, dst, TimeInterval::unbounded(), ArcKind::Normal, 0};
                if (i < t.size() && (t[i].text[0] == '[' || t[i].text[0] == '(')) {
                    arc.interval = parse_interval(t[i].text, line_, t[i].column);
                    ++i;
                }
                if (i < t.size()) {
                    std::tie(arc.kind, arc.group) = kind(t[i]);
                    ++i;
                }
                if (i < t.size()) fail("unexpected '" + t[i].text + "'", t[i].column);
                desc_.input_arcs.push_back(std::move(arc));
            } else if (is_transition(src)) {
                if (!is_place(dst)) fail("unknown place '" + dst + "'", t[2].column);
                RawOutputArc arc{src, dst, ArcKind::Normal, 0};
                if (i < t.size() && (t[i].text[0] == '[' || t[i].text[0] == '(')) {
                    fail("output arcs carry no interval", t[i].column);
                }
                if (i < t.size()) {
                    std::tie(arc.kind, arc.group) = kind(t[i]);
                    ++i;
                }
                if (i < t.size()) fail("unexpected '" + t[i].text + "'", t[i].column);
                desc_.output_arcs.push_back(std::move(arc));
            } else {
                fail("unknown place or transition '" + src + "'", t[0].column);
            }
        }
    }

    std::string_view text_;
    int line_ = 0;
    Section section_ = Section::None;
    NetDescription desc_;
    std::vector<PendingArc> arcs_;
    std::vector<MarkingLine> marking_;
};

const char* kind_suffix(ArcKind kind) {
    switch (kind) {
    case ArcKind::Normal: return "";
    case ArcKind::Inhibitor: return " inhibitor";
    case ArcKind::Transport: return " transport:";
    }
    return "";
}

} // namespace

TimeInterval parse_interval(std::string_view text, int line, int column) {
    return IntervalReader(text, line, column).read();
}

TimeInterval parse_invariant(std::string_view text, int line, int column) {
    if (text.rfind("<=", 0) == 0 || text.rfind("<", 0) == 0) {
        const bool weak = text.rfind("<=", 0) == 0;
        const std::string_view num = text.substr(weak ? 2 : 1);
        const auto c = parse_natural(num);
        if (!c) throw ParseError("bad invariant '" + std::string(text) + "'", line, column);
        try {
            return TimeInterval::make(0, false, *c, !weak);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'", line, column);
        }
    }
    return parse_interval(text, line, column);
}

NetDescription parse_net(std::string_view text) { return NetReader(text).read(); }

LoadedNet load_net_text(std::string_view text) {
    TimedArcPetriNet net = validate_net(parse_net(text));
    ConcreteMarking initial = ConcreteMarking::initial(net);
    return {std::move(net), std::move(initial)};
}

LoadedNet load_net(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_net_text(buf.str());
}

std::string render_net(const NetDescription& net) {
    std::ostringstream out;
    if (!net.name.empty()) out << "net " << net.name << '\n';
    if (net.bound > 0) out << "bound " << net.bound << '\n';
    out << "\nplaces\n";
    for (const auto& p : net.places) {
        out << "  " << p.name;
        if (!p.invariant.is_trivial()) out << " inv " << p.invariant.to_string();
        out << '\n';
    }
    out << "\ntransitions\n";
    for (const auto& t : net.transitions) out << "  " << t << '\n';
    out << "\narcs\n";
    for (const auto& a : net.input_arcs) {
        out << "  " << a.place << " -> " << a.transition;
        if (!a.interval.is_trivial()) out << ' ' << a.interval.to_string();
        out << kind_suffix(a.kind);
        if (a.kind == ArcKind::Transport) out << a.group;
        out << '\n';
    }
    for (const auto& a : net.output_arcs) {
        out << "  " << a.transition << " -> " << a.place << kind_suffix(a.kind);
        if (a.kind == ArcKind::Transport) out << a.group;
        out << '\n';
    }
    bool any = false;
    for (const auto& p : net.places) any = any || p.initial_tokens > 0;
    if (any) {
        out << "\nmarking\n";
        for (const auto& p : net.places) {
            if (p.initial_tokens > 0) out << "  " << p.name << ' ' << p.initial_tokens << '\n';
        }
    }
    return out.str();
}

std::string render_net(const TimedArcPetriNet& net) { return render_net(describe(net)); }

} // namespace tapn
