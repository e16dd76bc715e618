#include "passoc/io.hpp"

#include "passoc/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace passoc {

namespace {

std::pair<std::string, std::string> scalar_pair(const YAML::Node& node, const char* what)
{
    if (!node.IsSequence() || node.size() != 2 || !node[0].IsScalar() || !node[1].IsScalar())
        throw ParseError(std::string("each ") + what + " must be a pair [a, b]");
    return {node[0].Scalar(), node[1].Scalar()};
}

std::int64_t to_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + " '" + s + "' is not an integer");
    }
}

PosetInput parse_document(const YAML::Node& doc)
{
    if (!doc.IsMap())
        throw ParseError("the document must be a mapping");
    for (const auto& kv : doc) {
        auto key = kv.first.as<std::string>();
        if (key != "elements" && key != "relations" && key != "order" && key != "generators" && key != "name")
            throw ParseError("unknown field '" + key + "'");
    }

    PosetInput out;
    if (doc["order"]) {
        if (doc["elements"] || doc["relations"])
            throw ParseError("an affine poset takes 'order' and 'generators' only");
        if (!doc["order"].IsScalar())
            throw ParseError("'order' must be an integer");
        auto order = to_int(doc["order"].Scalar(), "order");
        std::vector<AffinePoset::Generator> gens;
        if (auto g = doc["generators"]) {
            if (!g.IsSequence())
                throw ParseError("'generators' must be a list of pairs");
            for (const auto& pair : g) {
                auto [a, b] = scalar_pair(pair, "generator");
                gens.emplace_back(to_int(a, "generator"), to_int(b, "generator"));
            }
        }
        out.affine = AffinePoset::build(order, gens);
        return out;
    }

    if (doc["generators"])
        throw ParseError("'generators' needs 'order'");
    auto el = doc["elements"];
    if (!el || !el.IsSequence())
        throw ParseError("'elements' must be a list");
    std::vector<std::string> names;
    for (const auto& e : el) {
        if (!e.IsScalar())
            throw ParseError("element names must be scalars");
        names.push_back(e.Scalar());
    }
    std::vector<Poset::Relation> relations;
    if (auto r = doc["relations"]) {
        if (!r.IsSequence())
            throw ParseError("'relations' must be a list of pairs");
        for (const auto& pair : r)
            relations.push_back(scalar_pair(pair, "relation"));
    }
    out.finite = Poset::build(std::move(names), relations);
    return out;
}

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string yaml_scalar(const std::string& s)
{
    YAML::Emitter e;
    e << YAML::DoubleQuoted << s;
    return e.c_str();
}

} // namespace

PosetInput parse_poset_input(std::string_view text)
{
    YAML::Node doc;
    try {
        doc = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    return parse_document(doc);
}

PosetInput read_poset_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_poset_input(buf.str());
}

std::string write_poset(const Poset& p)
{
    std::string out = "elements: [";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? ", " : "") + yaml_scalar(p.name(i));
    out += "]\nrelations: [";
    const auto& covers = p.cover_relations();
    for (std::size_t k = 0; k < covers.size(); ++k)
        out += (k ? ", [" : "[") + yaml_scalar(p.name(covers[k].first)) + ", " + yaml_scalar(p.name(covers[k].second)) +
               "]";
    return out + "]\n";
}

std::string hasse_dot(const Poset& p)
{
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (const auto& name : p.names())
        out += "  " + quote(name) + ";\n";
    for (const auto& [i, j] : p.cover_relations())
        out += "  " + quote(p.name(i)) + " -> " + quote(p.name(j)) + ";\n";
    return out + "}\n";
}

std::string affine_hasse_dot(const AffinePoset& p)
{
    const std::int64_t n = p.order();
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (std::int64_t i = 0; i < 2 * n; ++i)
        out += "  " + quote(std::to_string(i)) + ";\n";
    for (std::int64_t i = 0; i < 2 * n; ++i)
        for (auto j : p.upper_covers(i))
            if (j < 2 * n)
                out += "  " + quote(std::to_string(i)) + " -> " + quote(std::to_string(j)) + ";\n";
    return out + "}\n";
}

std::string tubing_lattice_dot(const std::vector<Tubing>& tubings,
                               const std::function<std::string(const Tubing&)>& format)
{
    std::string out = "digraph tubings {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < tubings.size(); ++i)
        out += "  t" + std::to_string(i) + " [label=" + quote(format(tubings[i])) + "];\n";
    for (std::size_t i = 0; i < tubings.size(); ++i)
        for (std::size_t j = 0; j < tubings.size(); ++j)
            if (tubings[j].size() == tubings[i].size() + 1 && tubings[j].includes(tubings[i]))
                out += "  t" + std::to_string(i) + " -> t" + std::to_string(j) + ";\n";
    return out + "}\n";
}

std::string write_ine(const HalfSpaceSystem& system)
{
    std::ostringstream out;
    out << "* passoc H-representation\n";
    for (std::size_t i = 0; i < system.dimension(); ++i)
        out << "* variable " << i + 1 << ": " << system.variables()[i] << '\n';
    std::size_t row = 0;
    for (const auto& c : system.equalities())
        out << "* label " << ++row << ": " << c.label << '\n';
    for (const auto& c : system.inequalities())
        out << "* label " << ++row << ": " << c.label << '\n';
    out << "H-representation\n";
    if (!system.equalities().empty()) {
        out << "linearity " << system.equalities().size();
        for (std::size_t i = 1; i <= system.equalities().size(); ++i)
            out << ' ' << i;
        out << '\n';
    }
    out << "begin\n";
    out << ' ' << row << ' ' << system.dimension() + 1 << " rational\n";
    auto emit = [&](const Constraint& c) {
        out << ' ' << to_string(-c.rhs);
        for (const auto& a : c.functional.coefficients)
            out << ' ' << to_string(a);
        out << '\n';
    };
    for (const auto& c : system.equalities())
        emit(c);
    for (const auto& c : system.inequalities())
        emit(c);
    out << "end\n";
    return out.str();
}

HalfSpaceSystem parse_ine(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::map<std::size_t, std::string> variables;
    std::map<std::size_t, std::string> labels;
    std::set<std::size_t> linearity;

    auto numbered = [&](const std::string& rest, std::map<std::size_t, std::string>& into) {
        auto colon = rest.find(": ");
        if (colon == std::string::npos)
            throw ParseError("malformed comment line '" + line + "'");
        into[static_cast<std::size_t>(to_int(rest.substr(0, colon), "index"))] = rest.substr(colon + 2);
    };

    bool in_body = false;
    while (std::getline(in, line)) {
        if (line.rfind("* variable ", 0) == 0)
            numbered(line.substr(11), variables);
        else if (line.rfind("* label ", 0) == 0)
            numbered(line.substr(8), labels);
        else if (line.rfind("linearity", 0) == 0) {
            std::istringstream ls(line.substr(9));
            std::size_t count = 0;
            ls >> count;
            for (std::size_t i = 0, k = 0; i < count && ls >> k; ++i)
                linearity.insert(k);
        } else if (line == "begin") {
            in_body = true;
            break;
        }
    }
    if (!in_body)
        throw ParseError("missing 'begin'");

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string kind;
    if (!std::getline(in, line))
        throw ParseError("missing size line");
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> kind) || kind != "rational" || cols == 0)
        throw ParseError("malformed size line '" + line + "'");

    std::vector<std::string> names;
    for (std::size_t i = 1; i < cols; ++i)
        names.push_back(variables.count(i) ? variables[i] : "x" + std::to_string(i));
    HalfSpaceSystem system(names);

    for (std::size_t r = 1; r <= rows; ++r) {
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(rows) + " rows");
        std::istringstream ls(line);
        std::vector<Rational> values;
        std::string tok;
        while (ls >> tok)
            values.push_back(parse_rational(tok));
        if (values.size() != cols)
            throw ParseError("row " + std::to_string(r) + " has " + std::to_string(values.size()) + " entries");
        LinearFunctional f;
        f.coefficients.assign(values.begin() + 1, values.end());
        std::string label = labels.count(r) ? labels[r] : "row" + std::to_string(r);
        if (linearity.count(r))
            system.add_equality(std::move(f), -values[0], std::move(label));
        else
            system.add_inequality(std::move(f), -values[0], std::move(label));
    }
    if (!std::getline(in, line) || line != "end")
        throw ParseError("missing 'end'");
    return system;
}

namespace {

using Vec = std::vector<double>;

double dotd(const Vec& a, const Vec& b)
{
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

} // namespace

std::string write_off(const HalfSpaceSystem& system, const std::vector<VertexCertificate>& vertices)
{
    if (free_dimension(system) != 3)
        throw InvalidInputError("OFF export needs a 3-dimensional polytope");
    std::vector<RationalPoint> pts;
    for (const auto& v : vertices)
        pts.push_back(v.point);
    if (affine_dimension(pts) != 3)
        throw InvalidInputError("the vertices do not span three dimensions");

    const std::size_t dim = system.dimension();
    Vec centroid(dim, 0.0);
    std::vector<Vec> coords;
    for (const auto& p : pts) {
        Vec v;
        for (const auto& c : p.coords)
            v.push_back(c.convert_to<double>());
        for (std::size_t i = 0; i < dim; ++i)
            centroid[i] += v[i] / static_cast<double>(pts.size());
        coords.push_back(std::move(v));
    }

    // Gram-Schmidt on the vertex offsets, keeping the three largest residuals.
    std::vector<Vec> basis;
    for (int round = 0; round < 3; ++round) {
        Vec best;
        double best_norm = 0;
        for (const auto& v : coords) {
            Vec r(dim);
            for (std::size_t i = 0; i < dim; ++i)
                r[i] = v[i] - centroid[i];
            for (const auto& b : basis) {
                double k = dotd(r, b);
                for (std::size_t i = 0; i < dim; ++i)
                    r[i] -= k * b[i];
            }
            double norm = std::sqrt(dotd(r, r));
            if (norm > best_norm) {
                best_norm = norm;
                best = std::move(r);
            }
        }
        for (auto& x : best)
            x /= best_norm;
        basis.push_back(std::move(best));
    }

    auto chart = [&](const Vec& v) {
        Vec r(dim);
        for (std::size_t i = 0; i < dim; ++i)
            r[i] = v[i] - centroid[i];
        return std::array<double, 3>{dotd(r, basis[0]), dotd(r, basis[1]), dotd(r, basis[2])};
    };
    std::vector<std::array<double, 3>> local;
    for (const auto& v : coords)
        local.push_back(chart(v));

    std::vector<std::vector<std::size_t>> faces;
    for (const auto& label : facet_labels(system, vertices)) {
        const auto& c = system.inequalities()[*system.find_inequality(label)];
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (std::find(vertices[i].tight.begin(), vertices[i].tight.end(), label) != vertices[i].tight.end())
                on.push_back(i);
        Vec grad;
        for (const auto& a : c.functional.coefficients)
            grad.push_back(a.convert_to<double>());
        // The inequality is f >= rhs, so the outward normal is -grad.
        std::array<double, 3> outward{-dotd(grad, basis[0]), -dotd(grad, basis[1]), -dotd(grad, basis[2])};
        std::array<double, 3> mid{0, 0, 0};
        for (auto i : on)
            for (int k = 0; k < 3; ++k)
                mid[k] += local[i][k] / static_cast<double>(on.size());
        std::array<double, 3> u{local[on[0]][0] - mid[0], local[on[0]][1] - mid[1], local[on[0]][2] - mid[2]};
        auto w = cross(outward, u);
        std::vector<std::pair<double, std::size_t>> angle;
        for (auto i : on) {
            std::array<double, 3> r{local[i][0] - mid[0], local[i][1] - mid[1], local[i][2] - mid[2]};
            angle.emplace_back(std::atan2(dot3(r, w), dot3(r, u)), i);
        }
        std::sort(angle.begin(), angle.end());
        std::vector<std::size_t> face;
        for (const auto& [a, i] : angle)
            face.push_back(i);
        faces.push_back(std::move(face));
    }

    std::string out = "OFF\n" + std::to_string(local.size()) + " " + std::to_string(faces.size()) + " 0\n";
    char buf[96];
    for (auto v : local) {
        for (auto& x : v)
            if (std::abs(x) < 1e-9)
                x = 0;
        std::snprintf(buf, sizeof buf, "%.9g %.9g %.9g\n", v[0], v[1], v[2]);
        out += buf;
    }
    for (const auto& f : faces) {
        out += std::to_string(f.size());
        for (auto i : f)
            out += " " + std::to_string(i);
        out += "\n";
    }
    return out;
}

} // namespace passoc
