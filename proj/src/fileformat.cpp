#include "skewhopf/fileformat.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace skewhopf {

FormatError::FormatError(const std::string& msg, int l, int c)
    : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg : msg),
      line(l),
      col(c) {}

// ---------------------------------------------------------------- TOML subset

std::string TomlValue::as_string() const {
    switch (kind) {
        case Kind::string: return str;
        case Kind::integer: return std::to_string(integer);
        case Kind::boolean: return boolean ? "true" : "false";
        case Kind::array: break;
    }
    throw FormatError("expected a scalar value, found an array", line, col);
}

std::vector<std::string> TomlValue::as_strings() const {
    if (kind != Kind::array) throw FormatError("expected an array", line, col);
    std::vector<std::string> out;
    for (const auto& v : items) out.push_back(v.as_string());
    return out;
}

const TomlValue* TomlTable::find(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

std::string TomlTable::get(const std::string& key, const std::string& def) const {
    const TomlValue* v = find(key);
    return v ? v->as_string() : def;
}

std::string TomlTable::require(const std::string& key) const {
    const TomlValue* v = find(key);
    if (!v) throw FormatError("missing key '" + key + "'", line, 1);
    return v->as_string();
}

std::map<std::string, std::string> TomlTable::strings() const {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : entries) out[k] = v.as_string();
    return out;
}

const TomlTable* TomlDoc::find(const std::vector<std::string>& path) const {
    auto it = sections.find(path);
    return it == sections.end() ? nullptr : &it->second;
}

namespace {

std::string join_path(const std::vector<std::string>& p) {
    std::string s;
    for (const auto& c : p) s += (s.empty() ? "" : ".") + c;
    return s;
}

}  // namespace

const TomlTable& TomlDoc::require(const std::vector<std::string>& path) const {
    const TomlTable* t = find(path);
    if (!t) throw FormatError("missing section [" + join_path(path) + "]");
    return *t;
}

std::vector<std::string> TomlDoc::children(const std::vector<std::string>& prefix) const {
    std::vector<std::string> out;
    for (const auto& [p, t] : sections) {
        if (p.size() <= prefix.size() || !std::equal(prefix.begin(), prefix.end(), p.begin())) continue;
        const std::string& n = p[prefix.size()];
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    return out;
}

namespace {

class TomlParser {
public:
    explicit TomlParser(const std::string& s) : s_(s) {}

    TomlDoc run() {
        TomlDoc doc;
        std::vector<std::string> current;
        doc.sections[current].line = 1;
        while (true) {
            skip_blank(true);
            if (eof()) break;
            if (peek() == '[') {
                int l = line_;
                ++i_;
                current = path(']');
                expect(']');
                end_of_line();
                if (doc.sections.count(current) && !current.empty())
                    throw FormatError("duplicate section [" + join_path(current) + "]", l, 1);
                doc.sections[current].line = l;
                continue;
            }
            int l = line_, c = col();
            std::string key = join_path(path('='));
            skip_blank(false);
            expect('=');
            skip_blank(false);
            TomlValue v = value();
            end_of_line();
            TomlTable& t = doc.sections[current];
            if (t.find(key)) throw FormatError("duplicate key '" + key + "'", l, c);
            t.entries.emplace_back(key, std::move(v));
        }
        return doc;
    }

private:
    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1;
    size_t line_start_ = 0;

    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[i_]; }
    int col() const { return static_cast<int>(i_ - line_start_) + 1; }
    [[noreturn]] void fail(const std::string& m) const { throw FormatError(m, line_, col()); }

    void newline() {
        ++i_;
        ++line_;
        line_start_ = i_;
    }
    void skip_blank(bool newlines) {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') ++i_;
            else if (c == '#')
                while (!eof() && peek() != '\n') ++i_;
            else if (c == '\n' && newlines) newline();
            else break;
        }
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    void end_of_line() {
        skip_blank(false);
        if (eof()) return;
        if (peek() != '\n') fail("unexpected text after value");
        newline();
    }
    std::string quoted() {
        expect('"');
        std::string out;
        while (true) {
            if (eof() || peek() == '\n') fail("unterminated string");
            char c = s_[i_++];
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) fail("unterminated escape");
                char e = s_[i_++];
                out += e == 'n' ? '\n' : e == 't' ? '\t' : e;
            } else {
                out += c;
            }
        }
        return out;
    }
    std::vector<std::string> path(char stop) {
        std::vector<std::string> out;
        while (true) {
            skip_blank(false);
            if (peek() == '"') {
                out.push_back(quoted());
            } else {
                std::string b;
                while (!eof()) {
                    char c = peek();
                    if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == '=' || c == '"' || c == '[' ||
                        c == ']' || c == '#')
                        break;
                    b += c;
                    ++i_;
                }
                if (b.empty()) fail("expected a key");
                out.push_back(b);
            }
            skip_blank(false);
            if (peek() == '.') {
                ++i_;
                continue;
            }
            if (peek() != stop) fail(std::string("expected '.' or '") + stop + "'");
            return out;
        }
    }
    TomlValue value() {
        TomlValue v;
        v.line = line_;
        v.col = col();
        char c = peek();
        if (c == '"') {
            v.str = quoted();
        } else if (c == '[') {
            v.kind = TomlValue::Kind::array;
            ++i_;
            while (true) {
                skip_blank(true);
                if (peek() == ']') {
                    ++i_;
                    break;
                }
                v.items.push_back(value());
                skip_blank(true);
                if (peek() == ',') ++i_;
                else if (peek() != ']') fail("expected ',' or ']' in array");
            }
        } else if (s_.compare(i_, 4, "true") == 0 || s_.compare(i_, 5, "false") == 0) {
            v.kind = TomlValue::Kind::boolean;
            v.boolean = s_[i_] == 't';
            i_ += v.boolean ? 4 : 5;
        } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i_;
            ++i_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
            std::string digits = s_.substr(start, i_ - start);
            if (digits == "-" || digits == "+") fail("expected a number");
            v.kind = TomlValue::Kind::integer;
            v.integer = std::stol(digits);
        } else {
            fail("expected a value");
        }
        return v;
    }
};

bool bare_ok(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

std::string key_text(const std::string& s) { return bare_ok(s) ? s : toml_quote(s); }

std::string strip_spaces(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

std::string string_array(const std::vector<std::string>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + toml_quote(v[i]);
    return s + "]";
}

}  // namespace

TomlDoc toml_parse(const std::string& text) { return TomlParser(text).run(); }

std::string toml_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

// ---------------------------------------------------------------- presentations

bool has_presentation(const TomlDoc& d) {
    const TomlTable* root = d.find({});
    return (root && root->has("catalog")) || d.find({"variables"});
}

Presentation load_presentation(const TomlDoc& d) {
    const TomlTable& root = d.require({});
    if (root.has("catalog")) {
        CatalogParams params;
        if (const TomlTable* p = d.find({"params"})) params = p->strings();
        return catalog(root.require("catalog"), params);
    }
    std::string name = root.get("name", "presentation");
    Field f = rationals();
    if (const TomlTable* t = d.find({"field"})) f = parse_field(t->get("name", "Q"));
    std::vector<std::string> gens;
    std::vector<bool> laurent;
    if (const TomlTable* t = d.find({"coefficients"})) {
        if (const TomlValue* g = t->find("gens")) gens = g->as_strings();
        if (const TomlValue* l = t->find("laurent"))
            for (const auto& v : l->items) laurent.push_back(v.kind == TomlValue::Kind::boolean ? v.boolean : v.as_string() == "true");
    }
    laurent.resize(gens.size(), false);
    const TomlTable& vt = d.require({"variables"});
    const TomlValue* names = vt.find("names");
    if (!names) throw FormatError("[variables] needs names", vt.line, 1);
    PresentationBuilder b(name, f, gens, laurent);
    std::vector<std::string> vars = names->as_strings();
    b.vars(vars);
    for (const auto& v : d.children({"sigma"})) b.sigma(v, d.require({"sigma", v}).strings());
    for (const auto& v : d.children({"delta"})) b.delta(v, d.require({"delta", v}).strings());
    for (const auto& key : d.children({"relation"})) {
        const TomlTable& t = d.require({"relation", key});
        auto star = key.find('*');
        if (star == std::string::npos) throw FormatError("relation key must read \"u*v\"", t.line, 1);
        std::string u = key.substr(0, star), v = key.substr(star + 1);
        std::string rhs;
        for (const auto& var : vars)
            if (const TomlValue* c = t.find("linear." + var))
                rhs += (rhs.empty() ? "" : " + ") + ("(" + c->as_string() + ")*" + var);
        rhs += (rhs.empty() ? "" : " + ") + ("(" + t.get("const", "0") + ")");
        b.relation(u, v, "1", t.get("lead", "1"), rhs);
    }
    if (const TomlTable* t = d.find({"flags"})) {
        PresentationFlags fl;
        fl.quasi_commutative = t->get("quasi_commutative", "false") == "true";
        fl.bijective = t->get("bijective", "false") == "true";
        b.flags(fl);
    }
    return b.build();
}

std::string write_presentation(const Presentation& p) {
    std::ostringstream o;
    const auto& R = p->ring;
    o << "name = " << toml_quote(p->name) << "\n\n[field]\nname = " << toml_quote(R->field->name()) << "\n";
    if (R->ngens()) {
        std::vector<std::string> l;
        o << "\n[coefficients]\ngens = " << string_array(R->gens) << "\nlaurent = [";
        for (size_t i = 0; i < R->ngens(); ++i) o << (i ? ", " : "") << (R->laurent[i] ? "true" : "false");
        o << "]\n";
    }
    o << "\n[variables]\nnames = " << string_array(p->vars) << "\n";
    for (size_t v = 0; v < p->nvars(); ++v) {
        const EndoSpec& s = p->sigma[v];
        if (!s.is_identity()) {
            o << "\n[sigma." << key_text(p->vars[v]) << "]\n";
            for (size_t g = 0; g < R->ngens(); ++g) o << key_text(R->gens[g]) << " = " << toml_quote(s.images[g].str()) << "\n";
        }
        const DerivSpec& dd = p->delta[v];
        if (!dd.is_zero()) {
            o << "\n[delta." << key_text(p->vars[v]) << "]\n";
            for (size_t g = 0; g < R->ngens(); ++g)
                if (!dd.images[g].is_zero()) o << key_text(R->gens[g]) << " = " << toml_quote(dd.images[g].str()) << "\n";
        }
    }
    for (size_t j = 0; j < p->nvars(); ++j)
        for (size_t i = 0; i < j; ++i) {
            const PairRelation& r = p->relation(static_cast<int>(j), static_cast<int>(i));
            o << "\n[relation." << toml_quote(p->vars[j] + "*" + p->vars[i]) << "]\nlead = " << toml_quote(r.lead.str())
              << "\n";
            for (size_t k = 0; k < r.linear.size(); ++k)
                if (!r.linear[k].is_zero()) o << "linear." << key_text(p->vars[k]) << " = " << toml_quote(r.linear[k].str()) << "\n";
            if (!r.constant.is_zero()) o << "const = " << toml_quote(r.constant.str()) << "\n";
        }
    o << "\n[flags]\nquasi_commutative = " << (p->flags.quasi_commutative ? "true" : "false")
      << "\nbijective = " << (p->flags.bijective ? "true" : "false") << "\n";
    return o.str();
}

bool has_gen_hopf(const TomlDoc& d) { return d.find({"hopf"}) != nullptr; }

GenHopfSpec load_gen_hopf(const TomlDoc& d, const Presentation& p) {
    const TomlTable& t = d.require({"hopf"});
    if (t.get("structure", "") == "enveloping") return enveloping_hopf(p);
    std::map<std::string, std::string> delta, eps, S;
    for (const auto& [k, v] : t.entries) {
        auto dot = k.find('.');
        if (dot == std::string::npos) continue;
        std::string kind = k.substr(0, dot), gen = k.substr(dot + 1);
        if (kind == "delta") delta[gen] = v.as_string();
        else if (kind == "epsilon") eps[gen] = v.as_string();
        else if (kind == "antipode") S[gen] = v.as_string();
        else throw FormatError("unknown [hopf] key '" + k + "'", v.line, v.col);
    }
    return genhopf_make(p->name, p, delta, eps, S);
}

namespace {

std::string telem_text(const Factors& fs, const TElem& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : v.terms()) {
        std::string body;
        if (fs.empty()) body = "(" + c.str() + ")";
        for (size_t i = 0; i < fs.size(); ++i) {
            std::string part = fs[i].alg->key_str(k[i]);
            if (i == 0 && !c.is_one()) part = "(" + c.str() + ")*" + part;
            body += (i ? " @ " : "") + part;
        }
        s += (s.empty() ? "" : " + ") + body;
    }
    return s;
}

}  // namespace

std::string write_gen_hopf(const GenHopfSpec& h) {
    std::ostringstream o;
    const auto& p = h.alg->pres();
    o << "\n[hopf]\n";
    auto emit = [&](const char* kind, const GenMap& m) {
        for (size_t v = 0; v < p->nvars(); ++v)
            o << kind << "." << key_text(p->vars[v]) << " = "
              << toml_quote(telem_text(m.target(), m.var_image(static_cast<int>(v)))) << "\n";
        for (size_t g = 0; g < p->ring->ngens(); ++g)
            o << kind << "." << key_text(p->ring->gens[g]) << " = "
              << toml_quote(telem_text(m.target(), m.ring_image(static_cast<int>(g)))) << "\n";
    };
    emit("delta", h.delta);
    emit("epsilon", h.eps);
    emit("antipode", h.S);
    return o.str();
}

// ---------------------------------------------------------------- finite-dimensional data

namespace {

std::vector<std::string> tokens(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::optional<size_t> label_index(const std::vector<std::string>& labels, const std::string& t) {
    auto it = std::find(labels.begin(), labels.end(), t);
    if (it == labels.end()) return std::nullopt;
    return static_cast<size_t>(it - labels.begin());
}

std::optional<Scalar> try_scalar(Field f, const std::string& t) {
    try {
        return parse_scalar(f, t);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string coef_token(const Scalar& c) {
    std::string s = strip_spaces(c.str());
    if (c.is_rational()) return s;
    return "(" + s + ")";
}

}  // namespace

SVec parse_combination(Field f, const std::vector<const std::vector<std::string>*>& factors, const std::string& text) {
    const size_t nf = factors.size();
    std::vector<size_t> sizes;
    for (auto* l : factors) sizes.push_back(l->size());
    auto toks = tokens(text);
    SVec out;
    size_t i = 0;
    if (toks.size() == 1 && toks[0] == "0") return out;
    if (toks.empty()) throw FormatError("empty expression");
    Scalar sign(1);
    while (i < toks.size()) {
        if (toks[i] == "+" || toks[i] == "-") {
            if (toks[i] == "-") sign = -sign;
            ++i;
            continue;
        }
        Scalar c = sign;
        sign = Scalar(1);
        std::vector<std::optional<size_t>> idx(nf);
        size_t fi = 0;
        for (; i < toks.size() && toks[i] != "+" && toks[i] != "-"; ++i) {
            const std::string& t = toks[i];
            if (t == "@") {
                if (++fi >= nf) throw FormatError("too many tensor factors in '" + text + "'");
                continue;
            }
            if (nf) {
                const auto& labels = *factors[fi];
                if (auto k = label_index(labels, t)) {
                    idx[fi] = *k;
                    continue;
                }
                if (t.size() > 1 && t[0] == '-')
                    if (auto k = label_index(labels, t.substr(1))) {
                        idx[fi] = *k;
                        c = -c;
                        continue;
                    }
                bool done = false;
                for (size_t star = t.find('*'); star != std::string::npos && !done; star = t.find('*', star + 1)) {
                    auto k = label_index(labels, t.substr(star + 1));
                    if (!k) continue;
                    if (auto s = try_scalar(f, t.substr(0, star))) {
                        c *= *s;
                        idx[fi] = *k;
                        done = true;
                    }
                }
                if (done) continue;
            }
            auto s = try_scalar(f, t);
            if (!s) throw FormatError("unknown label or scalar '" + t + "' in '" + text + "'");
            c *= *s;
        }
        size_t flat = 0;
        for (size_t k = 0; k < nf; ++k) {
            if (!idx[k]) throw FormatError("missing tensor factor " + std::to_string(k + 1) + " in '" + text + "'");
            flat = flat * sizes[k] + *idx[k];
        }
        out.add(flat, c);
    }
    return out;
}

std::string write_combination(const std::vector<const std::vector<std::string>*>& factors, const Space& s,
                              const SVec& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [idx, c] : v.entries()) {
        std::string body;
        if (!factors.empty()) {
            auto parts = s.split(idx);
            for (size_t k = 0; k < factors.size(); ++k) body += (k ? " @ " : "") + (*factors[k])[parts[k]];
        }
        std::string term;
        if (factors.empty()) term = coef_token(c);
        else if (c.is_one()) term = body;
        else if ((-c).is_one()) term = "- " + body;
        else term = coef_token(c) + " " + body;
        if (out.empty()) out = term;
        else if (term.rfind("- ", 0) == 0) out += " " + term;
        else out += " + " + term;
    }
    return out;
}

namespace {

LinMap load_map(const TomlDoc& d, const std::vector<std::string>& path, Field f, const std::vector<std::string>& src,
                const std::vector<const std::vector<std::string>*>& target, bool require_all) {
    Space cod;
    for (auto* l : target) cod.dims.push_back(l->size());
    LinMap m(f, Space{src.size()}, cod);
    const TomlTable& t = d.require(path);
    for (const auto& [k, v] : t.entries) {
        auto i = label_index(src, k);
        if (!i) throw FormatError("unknown basis label '" + k + "' in [" + join_path(path) + "]", v.line, v.col);
        try {
            m.cols()[*i] = parse_combination(f, target, v.as_string());
        } catch (const FormatError& e) {
            throw FormatError(e.what(), v.line, v.col);
        }
    }
    if (require_all)
        for (const auto& l : src)
            if (!t.has(l)) throw FormatError("[" + join_path(path) + "] has no entry for '" + l + "'", t.line, 1);
    return m;
}

}  // namespace

FinDimAlg load_algebra(const TomlDoc& d, const std::string& name) {
    const TomlTable& t = d.require({"algebra", name});
    if (t.has("hopf")) return load_finite_hopf(d, t.require("hopf")).alg;
    Field f = parse_field(t.get("field", "Q"));
    const TomlValue* b = t.find("basis");
    if (!b) throw FormatError("[algebra." + name + "] needs basis", t.line, 1);
    std::vector<std::string> labels = b->as_strings();
    const size_t n = labels.size();
    std::vector<SVec> table(n * n);
    if (const TomlTable* m = d.find({"algebra", name, "mul"})) {
        for (const auto& [k, v] : m->entries) {
            auto toks = tokens(k);
            std::optional<size_t> a, c;
            if (toks.size() == 2) a = label_index(labels, toks[0]), c = label_index(labels, toks[1]);
            if (!a || !c) throw FormatError("product key must name two basis labels: '" + k + "'", v.line, v.col);
            try {
                table[*a * n + *c] = parse_combination(f, {&labels}, v.as_string());
            } catch (const FormatError& e) {
                throw FormatError(e.what(), v.line, v.col);
            }
        }
    }
    SVec unit = parse_combination(f, {&labels}, t.get("unit", "1"));
    return algebra_make(f, labels, table, unit);
}

std::string write_algebra(const FinDimAlg& A, const std::string& name) {
    std::ostringstream o;
    const auto& L = A.labels();
    const size_t n = A.dim();
    o << "\n[algebra." << key_text(name) << "]\nfield = " << toml_quote(A.field()->name()) << "\nbasis = " << string_array(L)
      << "\nunit = " << toml_quote(write_combination({&L}, Space{n}, A.unit())) << "\n\n[algebra." << key_text(name)
      << ".mul]\n";
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!A.product(i, j).is_zero())
                o << toml_quote(L[i] + " " + L[j]) << " = " << toml_quote(write_combination({&L}, Space{n}, A.product(i, j)))
                  << "\n";
    return o.str();
}

std::vector<std::string> finite_hopf_names(const TomlDoc& d) { return d.children({"finite_hopf"}); }

HopfData load_finite_hopf(const TomlDoc& d, const std::string& name) {
    const TomlTable& t = d.require({"finite_hopf", name});
    if (t.has("builtin")) {
        auto params = t.strings();
        std::string b = params["builtin"];
        params.erase("builtin");
        return builtin_hopf(b, params);
    }
    FinDimAlg A = load_algebra(d, t.get("algebra", name));
    const auto& L = A.labels();
    const Field f = A.field();
    std::vector<std::string> none;
    LinMap delta = load_map(d, {"finite_hopf", name, "delta"}, f, L, {&L, &L}, true);
    LinMap eps = load_map(d, {"finite_hopf", name, "epsilon"}, f, L, {}, false);
    LinMap S = load_map(d, {"finite_hopf", name, "antipode"}, f, L, {&L}, true);
    return HopfData{name, A, delta, eps, S};
}

std::string write_finite_hopf(const HopfData& H, const std::string& name) {
    std::ostringstream o;
    o << write_algebra(H.alg, name);
    const auto& L = H.alg.labels();
    const size_t n = H.dim();
    o << "\n[finite_hopf." << key_text(name) << "]\nalgebra = " << toml_quote(name) << "\n";
    auto emit = [&](const char* kind, const LinMap& m, const std::vector<const std::vector<std::string>*>& fs,
                    const Space& s) {
        o << "\n[finite_hopf." << key_text(name) << "." << kind << "]\n";
        for (size_t i = 0; i < n; ++i)
            if (!m.col(i).is_zero() || fs.size()) o << toml_quote(L[i]) << " = " << toml_quote(write_combination(fs, s, m.col(i))) << "\n";
    };
    emit("delta", H.delta, {&L, &L}, Space{n, n});
    emit("epsilon", H.eps, {}, Space{});
    emit("antipode", H.S, {&L}, Space{n});
    return o.str();
}

ComoduleInput load_comodule(const TomlDoc& d) {
    const TomlTable& t = d.require({"coaction"});
    const std::string kind = t.get("kind", "coaction");
    ComoduleInput in;
    if (kind == "regular") {
        in.C = regular_comodule(load_finite_hopf(d, t.require("hopf")));
        return in;
    }
    if (kind == "quartic") {
        in.C = quartic_example().coaction;
        return in;
    }
    FinDimAlg A = load_algebra(d, t.require("algebra"));
    const auto& L = A.labels();
    if (kind == "grading") {
        GroupTable G = parse_group(t.require("group"));
        in.degrees.assign(A.dim(), G.identity);
        const TomlTable* deg = d.find({"coaction", "degree"});
        for (const auto& [k, v] : deg ? deg->entries : decltype(deg->entries){}) {
            auto i = label_index(L, k);
            int g = G.index_of(v.as_string());
            if (!i || g < 0) throw FormatError("bad degree entry '" + k + "'", v.line, v.col);
            in.degrees[*i] = static_cast<size_t>(g);
        }
        in.C = grading_to_comodule(A, G, in.degrees);
        in.group = G;
        return in;
    }
    HopfData H = load_finite_hopf(d, t.require("hopf"));
    const auto& HL = H.alg.labels();
    if (kind == "coaction") {
        LinMap rho = load_map(d, {"coaction", "rho"}, A.field(), L, {&L, &HL}, true);
        in.C = ComoduleAlgebra{t.get("name", "comodule"), A, H, rho};
        return in;
    }
    if (kind == "smash" || kind == "dual_action") {
        const size_t nA = A.dim();
        LinMap act(A.field(), Space{H.dim(), nA}, Space{nA});
        const TomlTable& s = d.require({"coaction", "action"});
        for (const auto& [k, v] : s.entries) {
            auto toks = tokens(k);
            std::optional<size_t> h, a;
            if (toks.size() == 2) h = label_index(HL, toks[0]), a = label_index(L, toks[1]);
            if (!h || !a) throw FormatError("action key must read \"h a\": '" + k + "'", v.line, v.col);
            act.cols()[*h * nA + *a] = parse_combination(A.field(), {&L}, v.as_string());
        }
        ActionSpec spec{H, A, act};
        in.C = kind == "smash" ? smash_product(spec) : action_to_comodule(spec);
        return in;
    }
    throw FormatError("unknown comodule kind '" + kind + "'", t.line, 1);
}

LinMap load_gamma(const TomlDoc& d, const ComoduleAlgebra& C, const std::string& arg) {
    const auto& HL = C.H.alg.labels();
    const auto& AL = C.A.labels();
    if (d.find({"cleft", arg})) return load_map(d, {"cleft", arg}, C.A.field(), HL, {&AL}, false);
    LinMap g(C.A.field(), Space{HL.size()}, Space{AL.size()});
    std::stringstream ss(arg);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) {
            if (strip_spaces(part).empty()) continue;
            throw FormatError("gamma entries read 'label = expression'");
        }
        std::string lab = strip_spaces(part.substr(0, eq));
        auto i = label_index(HL, lab);
        if (!i) throw FormatError("unknown label '" + lab + "' in gamma");
        g.cols()[*i] = parse_combination(C.A.field(), {&AL}, part.substr(eq + 1));
    }
    return g;
}

LinMap extend_from_generators(const FinDimAlg& T, const std::vector<const FinDimAlg*>& target,
                              const std::map<size_t, SVec>& images) {
    const size_t n = T.dim();
    const Field f = T.field();
    std::vector<SVec> vecs{T.unit()}, imgs{tensor_unit(target)};
    std::deque<size_t> queue{0};
    while (!queue.empty() && vecs.size() < n) {
        size_t k = queue.front();
        queue.pop_front();
        for (const auto& [g, img] : images) {
            SVec v = T.mul(vecs[k], T.basis(g));
            if (Subspace(f, n, vecs).contains(v)) continue;
            vecs.push_back(v);
            imgs.push_back(tensor_mul(target, imgs[k], img));
            queue.push_back(vecs.size() - 1);
        }
    }
    if (vecs.size() < n) throw FormatError("the given generators do not generate the algebra");
    Matrix M(f, n, n);
    for (size_t j = 0; j < n; ++j)
        for (const auto& [i, c] : vecs[j].entries()) M(i, j) = c;
    Space cod;
    for (auto* a : target) cod.dims.push_back(a->dim());
    LinMap out(f, Space{n}, cod);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Scalar> b(n, Scalar::zero(f));
        b[i] = Scalar::one(f);
        auto x = solve(M, b);
        for (size_t j = 0; j < n; ++j)
            if (!(*x)[j].is_zero()) out.cols()[i] += imgs[j].scaled((*x)[j]);
    }
    return out;
}

TorsorData load_torsor(const TomlDoc& d) {
    const TomlTable& t = d.require({"torsor"});
    const std::string kind = t.get("kind", "explicit");
    if (kind == "hopf") return hopf_to_torsor(load_finite_hopf(d, t.require("hopf")));
    if (kind == "galois") return galois_to_torsor(load_comodule(d).C);
    if (kind == "no_character") {
        Field f = parse_field(t.get("field", "Q"));
        int n = std::stoi(t.require("n"));
        Scalar q = t.has("q") ? parse_scalar(f, t.require("q")) : root_of_unity(f, n);
        return no_character_torsor(n, parse_scalar(f, t.get("alpha", "1")), parse_scalar(f, t.get("beta", "1")), q);
    }
    if (kind != "explicit") throw FormatError("unknown torsor kind '" + kind + "'", t.line, 1);
    FinDimAlg T = load_algebra(d, t.require("algebra"));
    FinDimAlg Top = opposite(T);
    const auto& L = T.labels();
    const TomlTable& m = d.require({"torsor", "mu"});
    std::map<size_t, SVec> images;
    for (const auto& [k, v] : m.entries) {
        auto i = label_index(L, k);
        if (!i) throw FormatError("unknown basis label '" + k + "' in [torsor.mu]", v.line, v.col);
        images[*i] = parse_combination(T.field(), {&L, &L, &L}, v.as_string());
    }
    LinMap mu = extend_from_generators(T, {&T, &Top, &T}, images);
    return TorsorData{t.get("name", "torsor"), T, mu};
}

HGSInput load_hgs(const TomlDoc& d) {
    const TomlTable& t = d.require({"hgs"});
    const std::string kind = t.get("kind", "explicit");
    HGSInput in;
    if (kind == "hopf") {
        in.finite = hopf_hgs(load_finite_hopf(d, t.require("hopf")));
        return in;
    }
    if (kind == "sridharan") {
        Field f = parse_field(t.get("field", "Q"));
        auto [g, c] = sridharan_table1_data(std::stoi(t.require("type")), parse_scalar(f, t.get("alpha", "2")));
        in.generated = sridharan_build(g, c).hgs;
        return in;
    }
    if (kind != "explicit") throw FormatError("unknown hgs kind '" + kind + "'", t.line, 1);
    HGSData s;
    s.A = load_finite_hopf(d, t.require("A"));
    s.B = load_finite_hopf(d, t.require("B"));
    s.Z = load_algebra(d, t.require("Z"));
    s.T = load_algebra(d, t.require("T"));
    const Field f = s.Z.field();
    const auto &AL = s.A.alg.labels(), &BL = s.B.alg.labels(), &ZL = s.Z.labels(), &TL = s.T.labels();
    s.alpha = load_map(d, {"hgs", "alpha"}, f, ZL, {&AL, &ZL}, true);
    s.beta = load_map(d, {"hgs", "beta"}, f, ZL, {&ZL, &BL}, true);
    s.gamma = load_map(d, {"hgs", "gamma"}, f, AL, {&ZL, &TL}, true);
    s.delta = load_map(d, {"hgs", "delta"}, f, BL, {&TL, &ZL}, true);
    s.S = load_map(d, {"hgs", "S"}, f, TL, {&ZL}, false);
    in.finite = std::move(s);
    return in;
}

}  // namespace skewhopf
