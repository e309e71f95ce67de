#include "legch/io.hpp"

#include <fstream>
#include <sstream>

namespace legch {

namespace {

// ---------------------------------------------------------------- TOML ----
// Restricted TOML reader covering the input schema: [section] headers,
// key = value with string/integer/boolean/array values, arrays possibly
// nested and spanning lines, # comments.

struct TomlReader {
    std::string text;
    size_t pos = 0;
    int line = 1;
    std::string origin;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
    }

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char get()
    {
        char c = text[pos++];
        if (c == '\n') ++line;
        return c;
    }

    void skip_ws(bool newlines)
    {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                get();
            } else {
                break;
            }
        }
    }

    std::string bare_key()
    {
        std::string k;
        while (!eof() && (isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-' || peek() == '.'))
            k += get();
        if (k.empty()) fail("expected a key");
        return k;
    }

    Json value()
    {
        skip_ws(false);
        if (eof()) fail("expected a value");
        char c = peek();
        if (c == '"') {
            get();
            std::string s;
            while (!eof() && peek() != '"') {
                char d = get();
                if (d == '\\' && !eof()) d = get();
                s += d;
            }
            if (eof()) fail("unterminated string");
            get();
            return Json(s);
        }
        if (c == '[') {
            get();
            Json arr = Json::array();
            skip_ws(true);
            while (!eof() && peek() != ']') {
                arr.push_back(value());
                skip_ws(true);
                if (!eof() && peek() == ',') {
                    get();
                    skip_ws(true);
                }
            }
            if (eof()) fail("unterminated array");
            get();
            return arr;
        }
        std::string tok;
        while (!eof() && peek() != '\n' && peek() != ',' && peek() != ']' && peek() != '#') tok += get();
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r'))
            tok.pop_back();
        if (tok == "true") return Json(true);
        if (tok == "false") return Json(false);
        if (tok.empty()) fail("expected a value");
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used == tok.size()) return Json(v);
        } catch (...) {
        }
        fail("unrecognized value '" + tok + "' (quote rationals like \"1/3\")");
    }

    Json parse()
    {
        Json root = Json::object();
        Json* section = &root;
        while (true) {
            skip_ws(true);
            if (eof()) break;
            if (peek() == '[') {
                get();
                std::string name = bare_key();
                skip_ws(false);
                if (eof() || get() != ']') fail("expected ']' after section name");
                section = &root;
                std::istringstream parts(name);
                std::string part;
                while (std::getline(parts, part, '.')) section = &((*section)[part]);
            } else {
                std::string key = bare_key();
                skip_ws(false);
                if (eof() || get() != '=') fail("expected '=' after key " + key);
                (*section)[key] = value();
            }
        }
        return root;
    }
};

// ----------------------------------------------------------- conversion ----

Rat json_rat(const Json& j, const std::string& field)
{
    if (j.is_number_integer()) return Rat(Int(j.get<long>()));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ValidationError(field, e.what());
        }
    }
    throw ValidationError(field, "expected an integer or a rational string");
}

Int json_int(const Json& j, const std::string& field)
{
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        Rat q = json_rat(j, field);
        if (!is_integer(q)) throw ValidationError(field, "expected an integer");
        return q.get_num();
    }
    throw ValidationError(field, "expected an integer");
}

IntVec json_ivec(const Json& j, const std::string& field)
{
    if (!j.is_array()) throw ValidationError(field, "expected an integer array");
    IntVec v;
    for (const auto& x : j) v.push_back(json_int(x, field));
    return v;
}

Json ivec_json(const IntVec& v)
{
    Json a = Json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            a.push_back(x.get_si());
        else
            a.push_back(x.get_str());
    }
    return a;
}

InputSpec input_from_json(const Json& root)
{
    InputSpec spec;
    if (!root.contains("polytope")) throw ValidationError("polytope", "missing section");
    const Json& p = root["polytope"];
    if (!p.contains("dim")) throw ValidationError("polytope.dim", "missing");
    long long dim = json_int(p["dim"], "polytope.dim").get_si();
    if (dim < 1) throw ValidationError("polytope.dim", "must be positive");
    spec.polytope.dim = static_cast<size_t>(dim);
    if (!p.contains("normals") || !p.contains("offsets"))
        throw ValidationError("polytope", "needs normals and offsets");
    const Json& normals = p["normals"];
    const Json& offsets = p["offsets"];
    if (!normals.is_array() || !offsets.is_array() || normals.size() != offsets.size())
        throw ValidationError("polytope", "normals and offsets must be arrays of equal length");
    for (size_t i = 0; i < normals.size(); ++i) {
        Facet f;
        f.normal = json_ivec(normals[i], "polytope.normals[" + std::to_string(i) + "]");
        if (f.normal.size() != spec.polytope.dim)
            throw ValidationError("polytope.normals[" + std::to_string(i) + "]",
                                  "normal dimension does not match dim");
        f.offset = json_rat(offsets[i], "polytope.offsets[" + std::to_string(i) + "]");
        spec.polytope.facets.push_back(std::move(f));
    }

    if (root.contains("lift")) {
        const Json& l = root["lift"];
        if (l.contains("sublattice")) {
            const Json& s = l["sublattice"];
            if (s.is_string()) {
                if (s.get<std::string>() != "auto")
                    throw ValidationError("lift.sublattice", "expected \"auto\" or row vectors");
            } else if (s.is_array()) {
                std::vector<IntVec> rows;
                for (size_t i = 0; i < s.size(); ++i)
                    rows.push_back(json_ivec(s[i], "lift.sublattice[" + std::to_string(i) + "]"));
                spec.sublattice_rows = rows;
            } else {
                throw ValidationError("lift.sublattice", "expected \"auto\" or row vectors");
            }
        }
        if (l.contains("fiber_points")) {
            spec.fiber_points = json_int(l["fiber_points"], "lift.fiber_points");
            if (*spec.fiber_points < 1)
                throw ValidationError("lift.fiber_points", "must be positive");
        }
        if (l.contains("component_labels") || l.contains("component_phases")) {
            if (!l.contains("component_labels") || !l.contains("component_phases"))
                throw ValidationError("lift", "component_labels and component_phases go together");
            const Json& labels = l["component_labels"];
            const Json& phases = l["component_phases"];
            if (!labels.is_array() || !phases.is_array() || labels.size() != phases.size() ||
                labels.empty())
                throw ValidationError("lift", "component arrays must be nonempty and equal length");
            spec.components.clear();
            for (size_t i = 0; i < labels.size(); ++i) {
                if (!labels[i].is_string())
                    throw ValidationError("lift.component_labels", "labels must be strings");
                spec.components.push_back(
                    {labels[i].get<std::string>(),
                     json_rat(phases[i], "lift.component_phases[" + std::to_string(i) + "]")});
            }
        }
    }

    if (root.contains("options")) {
        const Json& o = root["options"];
        if (o.contains("signs")) {
            for (const auto& s : o["signs"]) {
                Int v = json_int(s, "options.signs");
                if (v != 1 && v != -1) throw ValidationError("options.signs", "entries must be +-1");
                spec.signs.push_back(static_cast<int>(v.get_si()));
            }
            if (spec.signs.size() != spec.polytope.facets.size())
                throw ValidationError("options.signs", "one sign per facet required");
        }
        if (o.contains("max_word_len")) {
            Int v = json_int(o["max_word_len"], "options.max_word_len");
            if (v < 0) throw ValidationError("options.max_word_len", "must be nonnegative");
            spec.max_word_len = static_cast<int>(v.get_si());
        }
        if (o.contains("max_area")) spec.max_area = json_rat(o["max_area"], "options.max_area");
        if (o.contains("vertex")) {
            const Json& v = o["vertex"];
            if (v.is_string()) {
                if (v.get<std::string>() != "auto")
                    throw ValidationError("options.vertex", "expected \"auto\" or an exponent vector");
            } else {
                spec.vertex = json_ivec(v, "options.vertex");
            }
        }
    }
    return spec;
}

}  // namespace

InputSpec parse_input(const std::string& text, const std::string& origin)
{
    size_t i = 0;
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    Json root;
    if (i < text.size() && text[i] == '{') {
        try {
            root = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(origin + ": " + e.what());
        }
    } else {
        TomlReader reader{text, 0, 1, origin};
        root = reader.parse();
    }
    return input_from_json(root);
}

InputSpec parse_input_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str(), path);
}

namespace {

DelzantPolytope simplex_polytope(int n)
{
    // standard (n-1)-simplex: x_i >= 0, 1 - sum x_i >= 0
    DelzantPolytope p;
    p.dim = static_cast<size_t>(n - 1);
    for (size_t i = 0; i < p.dim; ++i) {
        IntVec e(p.dim);
        e[i] = 1;
        p.facets.push_back({e, Rat(0)});
    }
    IntVec diag(p.dim, Int(-1));
    p.facets.push_back({diag, Rat(1)});
    return p;
}

DelzantPolytope square_polytope()
{
    DelzantPolytope p;
    p.dim = 2;
    p.facets.push_back({{Int(1), Int(0)}, Rat(0)});
    p.facets.push_back({{Int(-1), Int(0)}, Rat(1)});
    p.facets.push_back({{Int(0), Int(1)}, Rat(0)});
    p.facets.push_back({{Int(0), Int(-1)}, Rat(1)});
    return p;
}

}  // namespace

std::vector<std::string> preset_names() { return {"clifford", "cliffordanti", "hopf", "p1xp1"}; }

InputSpec preset(const std::string& name, std::optional<int> n)
{
    InputSpec spec;
    if (name == "clifford" || name == "cliffordanti" || name == "hopf") {
        int nn = n.value_or(3);
        if (nn < 2) throw ValidationError("preset", name + " needs n >= 2");
        spec.polytope = simplex_polytope(nn);
        if (name == "cliffordanti") {
            std::vector<IntVec> rows;
            for (size_t i = 0; i < spec.polytope.dim; ++i) {
                IntVec e(spec.polytope.dim);
                e[i] = 1;
                rows.push_back(e);
            }
            spec.sublattice_rows = rows;
            spec.fiber_points = 1;
        } else {
            spec.fiber_points = nn;
        }
        if (name == "hopf")
            spec.components = {{"1", Rat(0)}, {"2", Rat(1, 2 * nn)}};
    } else if (name == "p1xp1") {
        if (n) throw ValidationError("preset", "p1xp1 takes no parameter");
        spec.polytope = square_polytope();
        spec.fiber_points = 2;
    } else {
        throw ValidationError("preset", "unknown preset " + name +
                                            " (available: clifford N, cliffordanti N, hopf N, p1xp1)");
    }
    return spec;
}

std::string preset_toml(const std::string& name, std::optional<int> n)
{
    InputSpec spec = preset(name, n);
    std::ostringstream os;
    os << "# preset " << name;
    if (n) os << " " << *n;
    os << "\n[polytope]\ndim = " << spec.polytope.dim << "\nnormals = [";
    for (size_t i = 0; i < spec.polytope.facets.size(); ++i) {
        os << (i ? ", [" : "[");
        const auto& nor = spec.polytope.facets[i].normal;
        for (size_t j = 0; j < nor.size(); ++j) os << (j ? ", " : "") << nor[j].get_str();
        os << "]";
    }
    os << "]\noffsets = [";
    for (size_t i = 0; i < spec.polytope.facets.size(); ++i)
        os << (i ? ", " : "") << '"' << rat_str(spec.polytope.facets[i].offset) << '"';
    os << "]\n\n[lift]\n";
    if (spec.sublattice_rows) {
        os << "sublattice = [";
        for (size_t i = 0; i < spec.sublattice_rows->size(); ++i) {
            os << (i ? ", [" : "[");
            const auto& row = (*spec.sublattice_rows)[i];
            for (size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j].get_str();
            os << "]";
        }
        os << "]\n";
    } else {
        os << "sublattice = \"auto\"\n";
    }
    if (spec.fiber_points) os << "fiber_points = " << spec.fiber_points->get_str() << "\n";
    os << "component_labels = [";
    for (size_t i = 0; i < spec.components.size(); ++i)
        os << (i ? ", " : "") << '"' << spec.components[i].label << '"';
    os << "]\ncomponent_phases = [";
    for (size_t i = 0; i < spec.components.size(); ++i)
        os << (i ? ", " : "") << '"' << rat_str(spec.components[i].phase) << '"';
    os << "]\n\n[options]\nmax_word_len = " << spec.max_word_len << "\n";
    return os.str();
}

LiftSpec resolve_lift(const InputSpec& spec, const LaurentPoly& potential)
{
    Sublattice image = spec.sublattice_rows ? Sublattice(spec.polytope.dim, *spec.sublattice_rows)
                                            : difference_lattice(potential);
    Int m;
    if (spec.fiber_points) {
        m = *spec.fiber_points;
    } else {
        auto idx = image.index();
        m = idx ? *idx : Int(1);
    }
    return LiftSpec(image, spec.components, m);
}

// ------------------------------------------------------------------ JSON ----

Json poly_to_json(const LaurentPoly& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"coeff", rat_str(c)}, {"exp", ivec_json(e)}});
    return {{"rank", p.rank()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const Json& j)
{
    if (!j.contains("rank")) throw ValidationError("poly.rank", "missing");
    LaurentPoly p(j["rank"].get<size_t>());
    for (const auto& t : j["terms"]) {
        IntVec e = json_ivec(t["exp"], "poly.exp");
        p.add_term(e, json_rat(t["coeff"], "poly.coeff"));
    }
    return p;
}

Json element_to_json(const CEElement& e)
{
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms()) {
        Json word = Json::array();
        for (const auto& l : w) word.push_back(l);
        terms.push_back({{"word", word}, {"coeff", poly_to_json(c)}});
    }
    return {{"terms", terms}};
}

CEElement element_from_json(const Json& j, const RingSpec& ring, const Truncation& trunc)
{
    CEElement e(ring, trunc);
    for (const auto& t : j["terms"]) {
        Word w;
        for (const auto& l : t["word"]) w.push_back(l.get<std::string>());
        e.add(w, poly_from_json(t["coeff"]));
    }
    return e;
}

Json ring_to_json(const RingSpec& r)
{
    Json vars = Json::array();
    for (const auto& v : r.vars) vars.push_back(v);
    Json areas = Json::array();
    for (const auto& a : r.areas) areas.push_back(rat_str(a));
    return {{"vars", vars}, {"areas", areas}};
}

RingSpec ring_from_json(const Json& j)
{
    RingSpec r;
    for (const auto& v : j["vars"]) r.vars.push_back(v.get<std::string>());
    if (j.contains("areas"))
        for (const auto& a : j["areas"]) r.areas.push_back(json_rat(a, "ring.areas"));
    if (!r.areas.empty() && r.areas.size() != r.vars.size())
        throw ValidationError("ring.areas", "one area per variable required");
    return r;
}

Json generator_to_json(const Generator& g)
{
    Json j{{"symbol", g.symbol},
           {"kind", g.kind == GenKind::Reeb ? "reeb" : "classical"},
           {"morse_index", g.morse_index},
           {"deg_r", rat_str(g.deg_r)},
           {"deg_z2", g.deg_z2},
           {"integral", g.integral}};
    if (g.kind == GenKind::Reeb) {
        j["angle"] = rat_str(g.angle);
        j["from"] = g.from;
        j["to"] = g.to;
    }
    return j;
}

Generator generator_from_json(const Json& j)
{
    Generator g;
    g.symbol = j["symbol"].get<std::string>();
    g.kind = j["kind"].get<std::string>() == "reeb" ? GenKind::Reeb : GenKind::Classical;
    g.morse_index = j["morse_index"].get<int>();
    g.deg_r = json_rat(j["deg_r"], "generator.deg_r");
    g.deg_z2 = j["deg_z2"].get<int>();
    g.integral = j.value("integral", true);
    if (g.kind == GenKind::Reeb) {
        g.angle = json_rat(j["angle"], "generator.angle");
        g.from = j.value("from", 0);
        g.to = j.value("to", 0);
    }
    return g;
}

Json table_to_json(const DifferentialTable& t)
{
    Json gens = Json::array();
    for (const auto& [sym, g] : t.alphabet.gens) gens.push_back(generator_to_json(g));
    Json entries = Json::object();
    for (const auto& [sym, e] : t.entries) entries[sym] = element_to_json(e);
    Json trunc{{"max_word_len", t.truncation.max_word_len}};
    if (t.truncation.max_area) trunc["max_area"] = rat_str(*t.truncation.max_area);
    return {{"schema", 1},         {"ring", ring_to_json(t.ring)}, {"generators", gens},
            {"entries", entries},  {"truncation", trunc},          {"truncated", t.truncated}};
}

DifferentialTable table_from_json(const Json& j)
{
    DifferentialTable t;
    t.ring = ring_from_json(j["ring"]);
    if (j.contains("truncation")) {
        const Json& tr = j["truncation"];
        t.truncation.max_word_len = tr.value("max_word_len", 8);
        if (tr.contains("max_area"))
            t.truncation.max_area = json_rat(tr["max_area"], "truncation.max_area");
    }
    t.truncated = j.value("truncated", false);
    for (const auto& g : j["generators"]) t.alphabet.add(generator_from_json(g));
    for (const auto& [sym, e] : j["entries"].items()) {
        if (!t.alphabet.contains(sym))
            throw ValidationError("entries", "entry for undeclared generator " + sym);
        t.entries.emplace(sym, element_from_json(e, t.ring, t.truncation));
    }
    return t;
}

Augmentation augmentation_from_json(const Json& j)
{
    Augmentation a;
    if (j.contains("generators"))
        for (const auto& [sym, v] : j["generators"].items())
            a.gen_values[sym] = json_rat(v, "augmentation.generators." + sym);
    if (j.contains("variables"))
        for (const auto& [sym, v] : j["variables"].items())
            a.var_values[sym] = json_rat(v, "augmentation.variables." + sym);
    return a;
}

ChainMap chainmap_from_json(const Json& j, const RingSpec& ring, const Truncation& trunc)
{
    ChainMap phi;
    for (const auto& [sym, e] : j["images"].items())
        phi.images.emplace(sym, element_from_json(e, ring, trunc));
    return phi;
}

MCProblem mcproblem_from_json(const Json& j, const RingSpec& ring, const Truncation& trunc)
{
    MCProblem p;
    if (j.contains("m_tables"))
        for (const auto& [dstr, entries] : j["m_tables"].items()) {
            int d = std::stoi(dstr);
            std::map<std::vector<std::string>, CEElement> table;
            for (const auto& entry : entries) {
                std::vector<std::string> inputs;
                for (const auto& s : entry["inputs"]) inputs.push_back(s.get<std::string>());
                table.emplace(std::move(inputs), element_from_json(entry["value"], ring, trunc));
            }
            p.m_tables.emplace(d, std::move(table));
        }
    if (j.contains("b"))
        for (const auto& [sym, v] : j["b"].items()) p.b[sym] = json_rat(v, "mc.b." + sym);
    if (j.contains("declared_max")) p.declared_max = j["declared_max"].get<int>();
    return p;
}

Matching matching_from_json(const Json& j)
{
    Matching m;
    for (const auto& c : j["components"]) {
        MatchingComponent mc;
        mc.circle = c.value("circle", false);
        auto read_end = [&](const char* key) -> std::optional<MatchingEnd> {
            if (!c.contains(key)) return std::nullopt;
            return MatchingEnd{c[key]["component"].get<std::string>(),
                               json_rat(c[key]["phase"], std::string("matching.") + key)};
        };
        mc.minus = read_end("minus");
        mc.plus = read_end("plus");
        m.components.push_back(std::move(mc));
    }
    return m;
}

// ------------------------------------------------------------- fixtures ----

DifferentialTable synthetic_closed_table()
{
    // delta x = y y with y odd and delta y = 1: the two Leibniz terms cancel
    // exactly; also the spec's quadratic example delta p = q r.
    DifferentialTable t;
    t.ring = RingSpec{};
    t.truncation = Truncation{6, std::nullopt};
    Generator x = Generator::classical("x", 4);
    Generator y = Generator::classical("y", 2);
    Generator p = Generator::classical("p", 2);
    Generator q = Generator::classical("q", 1);
    Generator r = Generator::classical("r", 1);
    t.alphabet.add(x);
    t.alphabet.add(y);
    t.alphabet.add(p);
    t.alphabet.add(q);
    t.alphabet.add(r);

    CEElement dx(t.ring, t.truncation);
    dx.add({"y", "y"}, LaurentPoly::constant(0, 1));
    CEElement dy(t.ring, t.truncation);
    dy.add({}, LaurentPoly::constant(0, 1));
    CEElement dp(t.ring, t.truncation);
    dp.add({"q", "r"}, LaurentPoly::constant(0, 1));
    t.entries.emplace("x", dx);
    t.entries.emplace("y", dy);
    t.entries.emplace("p", dp);
    t.entries.emplace("q", CEElement::zero(t.ring, t.truncation));
    t.entries.emplace("r", CEElement::zero(t.ring, t.truncation));
    return t;
}

DifferentialTable synthetic_broken_table()
{
    // one Koszul parity flipped relative to the closed fixture: delta^2 x
    // picks up 2y
    DifferentialTable t = synthetic_closed_table();
    Generator y = Generator::classical("y", 1);  // parity flip
    y.symbol = "y";
    t.alphabet.gens.erase("y");
    t.alphabet.add(y);
    return t;
}

}  // namespace legch
