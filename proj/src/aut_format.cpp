#include "supred/aut_format.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>

#include "supred/error.hpp"

namespace supred {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
            ++column;
            ++i;
        } else {
            std::size_t start = i;
            std::size_t start_col = column;
            while (i < text.size() && text[i] != '#' && text[i] != '\n' && text[i] != ' ' &&
                   text[i] != '\t' && text[i] != '\r' && text[i] != '\f' && text[i] != '\v') {
                ++i;
                ++column;
            }
            tokens.push_back({std::string(text.substr(start, i - start)), line, start_col});
        }
    }
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::vector<Automaton> parse_file() {
        std::vector<Automaton> out;
        std::set<std::string> names;
        while (!at_end()) {
            const Token& head = peek();
            Automaton a = parse_block();
            if (!names.insert(a.name()).second)
                throw ParseError("duplicate automaton name '" + a.name() + "'", head.line, head.column);
            out.push_back(std::move(a));
        }
        if (out.empty()) throw ParseError("no automaton block found", last_line(), 1);
        return out;
    }

private:
    bool at_end() const { return pos_ >= tokens_.size(); }

    std::size_t last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

    const Token& peek() const {
        if (at_end()) throw ParseError("unexpected end of input", last_line(), 1);
        return tokens_[pos_];
    }

    const Token& take() {
        const Token& t = peek();
        ++pos_;
        return t;
    }

    void expect(std::string_view keyword) {
        const Token& t = take();
        if (t.text != keyword)
            throw ParseError("expected '" + std::string(keyword) + "', found '" + t.text + "'",
                             t.line, t.column);
    }

    std::size_t take_count() {
        const Token& t = take();
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            throw ParseError("expected a non-negative count, found '" + t.text + "'", t.line,
                             t.column);
        return value;
    }

    StateId take_state(const Automaton& a) {
        const Token& t = take();
        auto s = a.find_state(t.text);
        if (!s) throw ParseError("unknown state '" + t.text + "'", t.line, t.column);
        return *s;
    }

    Automaton parse_block() {
        expect("automaton");
        std::string name = take().text;

        expect("events");
        std::size_t n_events = take_count();
        std::vector<Event> events;
        std::set<std::string> seen_events;
        for (std::size_t i = 0; i < n_events; ++i) {
            const Token& ev = take();
            if (!seen_events.insert(ev.text).second)
                throw ParseError("duplicate event '" + ev.text + "'", ev.line, ev.column);
            const Token& c = take();
            if (c.text != "c" && c.text != "u")
                throw ParseError("expected 'c' or 'u', found '" + c.text + "'", c.line, c.column);
            const Token& o = take();
            if (o.text != "o" && o.text != "n")
                throw ParseError("expected 'o' or 'n', found '" + o.text + "'", o.line, o.column);
            events.push_back({ev.text, c.text == "c", o.text == "o"});
        }
        Automaton a(Alphabet(std::move(events)), name);

        const Token& states_kw = peek();
        expect("states");
        std::size_t n_states = take_count();
        if (n_states == 0)
            throw ParseError("an automaton needs at least one state", states_kw.line,
                             states_kw.column);
        for (std::size_t i = 0; i < n_states; ++i) {
            const Token& st = take();
            if (a.find_state(st.text))
                throw ParseError("duplicate state '" + st.text + "'", st.line, st.column);
            a.add_state(st.text);
        }

        expect("initial");
        a.set_initial(take_state(a));

        expect("marked");
        std::size_t n_marked = take_count();
        for (std::size_t i = 0; i < n_marked; ++i) a.set_marked(take_state(a));

        expect("trans");
        std::size_t n_trans = take_count();
        for (std::size_t i = 0; i < n_trans; ++i) {
            StateId src = take_state(a);
            const Token& ev = take();
            auto e = a.alphabet().find(ev.text);
            if (!e) throw ParseError("unknown event '" + ev.text + "'", ev.line, ev.column);
            StateId dst = take_state(a);
            auto existing = a.next(src, *e);
            if (existing && *existing != dst)
                throw NondeterminismError("line " + std::to_string(ev.line) + ", column " +
                                          std::to_string(ev.column) +
                                          ": nondeterministic transition: state '" +
                                          a.state_name(src) + "' has two targets on event '" +
                                          ev.text + "'");
            a.add_transition(src, *e, dst);
        }
        expect("end");
        return a;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Automaton> parse_automata(std::string_view text) {
    return Parser(tokenize(text)).parse_file();
}

std::vector<Automaton> parse_automata(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_automata(text);
}

std::vector<Automaton> load_automata(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return parse_automata(in);
}

std::string serialize_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "automaton " << a.name() << '\n';
    out << "events " << a.num_events() << '\n';
    for (const auto& ev : a.alphabet().events())
        out << ev.name << ' ' << (ev.controllable ? 'c' : 'u') << ' ' << (ev.observable ? 'o' : 'n')
            << '\n';
    out << "states " << a.num_states() << '\n';
    for (StateId s = 0; s < a.num_states(); ++s) out << (s == 0 ? "" : " ") << a.state_name(s);
    out << '\n';
    out << "initial " << a.state_name(a.initial()) << '\n';
    auto marked = a.marked_states();
    out << "marked " << marked.size();
    for (StateId s : marked) out << ' ' << a.state_name(s);
    out << '\n';
    auto trans = a.transitions();
    out << "trans " << trans.size() << '\n';
    for (const auto& t : trans)
        out << a.state_name(t.source) << ' ' << a.alphabet()[t.event].name << ' '
            << a.state_name(t.target) << '\n';
    out << "end\n";
    return out.str();
}

std::string serialize_automata(const std::vector<Automaton>& automata) {
    std::string out;
    for (const auto& a : automata) out += serialize_automaton(a);
    return out;
}

void save_automata(const std::filesystem::path& path, const std::vector<Automaton>& automata) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << serialize_automata(automata);
}

}  // namespace supred
