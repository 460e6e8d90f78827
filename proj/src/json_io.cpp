#include "polydiag/json_io.hpp"

namespace polydiag {

namespace {

int get_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw validation_error(std::string(field) + ": missing or not an integer");
    return j[field].get<int>();
}

const json& get_array(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw validation_error(std::string(field) + ": missing or not an array");
    return j[field];
}

Rational rational_from_json(const json& v, const std::string& field) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_string()) {
            Rational q(v.get<std::string>(), 10);
            q.canonicalize();
            return q;
        }
    } catch (const std::exception&) {
        throw validation_error(field + ": not a rational (\"p/q\" string expected)");
    }
    throw validation_error(field + ": not a rational (\"p/q\" string expected)");
}

BigInt bigint_from_json(const json& v, const std::string& field) {
    try {
        if (v.is_number_integer()) return BigInt(v.get<long>());
        if (v.is_string()) return BigInt(v.get<std::string>(), 10);
    } catch (const std::exception&) {
        throw validation_error(field + ": not an integer (decimal string expected)");
    }
    throw validation_error(field + ": not an integer (decimal string expected)");
}

} // namespace

// ---------------------------------------------------------------------------
// Partitions and chains

json to_json(const SetPartition& p) {
    return json{{"n", p.n()}, {"blocks", p.blocks()}};
}

SetPartition partition_from_json(const json& j) {
    int n = get_int(j, "n");
    const json& blocks = get_array(j, "blocks");
    std::vector<std::vector<int>> bs;
    for (const auto& b : blocks) {
        if (!b.is_array()) throw validation_error("blocks: every block must be an array");
        std::vector<int> block;
        for (const auto& e : b) {
            if (!e.is_number_integer())
                throw validation_error("blocks: elements must be integers");
            block.push_back(e.get<int>());
        }
        bs.push_back(std::move(block));
    }
    return SetPartition::from_blocks(n, bs);
}

json to_json(const Chain& c) {
    json parts = json::array();
    for (const auto& p : c.partitions()) parts.push_back(to_json(p));
    return json{{"n", c.n()}, {"partitions", parts}};
}

Chain chain_from_json(const json& j) {
    int n = get_int(j, "n");
    std::vector<SetPartition> parts;
    for (const auto& pj : get_array(j, "partitions")) {
        SetPartition p = partition_from_json(pj);
        if (p.n() != n) throw validation_error("partitions: member n disagrees with chain n");
        parts.push_back(std::move(p));
    }
    return Chain(n, std::move(parts));
}

// ---------------------------------------------------------------------------
// Trees and nests

json to_json(const LeveledTree& t) {
    json verts = json::array();
    for (const auto& v : t.vertices()) {
        json vj{{"label", v.label}, {"level", v.level}};
        vj["parent"] = v.parent < 0 ? json(nullptr) : json(v.parent);
        verts.push_back(std::move(vj));
    }
    return json{{"n", t.n()}, {"vertices", verts}};
}

namespace {

template <typename Vertex>
std::vector<Vertex> vertices_from_json(const json& j, bool with_levels) {
    std::vector<Vertex> verts;
    for (const auto& vj : get_array(j, "vertices")) {
        Vertex v{};
        for (const auto& e : get_array(vj, "label")) {
            if (!e.is_number_integer())
                throw validation_error("vertices: label elements must be integers");
            v.label.push_back(e.get<int>());
        }
        if (!vj.contains("parent"))
            throw validation_error("vertices: parent: missing");
        v.parent = vj["parent"].is_null() ? -1 : vj["parent"].get<int>();
        if constexpr (requires { v.level; }) {
            if (with_levels)
                v.level = get_int(vj, "level");
        }
        verts.push_back(std::move(v));
    }
    return verts;
}

} // namespace

LeveledTree leveled_tree_from_json(const json& j) {
    int n = get_int(j, "n");
    return LeveledTree(n, vertices_from_json<LeveledTree::Vertex>(j, true));
}

json to_json(const RootedTree& t) {
    json verts = json::array();
    for (const auto& v : t.vertices()) {
        json vj{{"label", v.label}};
        vj["parent"] = v.parent < 0 ? json(nullptr) : json(v.parent);
        verts.push_back(std::move(vj));
    }
    return json{{"n", t.n()}, {"vertices", verts}};
}

RootedTree rooted_tree_from_json(const json& j) {
    int n = get_int(j, "n");
    return RootedTree(n, vertices_from_json<RootedTree::Vertex>(j, false));
}

json to_json(const Nest& nest) {
    return json{{"n", nest.n()}, {"members", nest.members()}};
}

Nest nest_from_json(const json& j) {
    int n = get_int(j, "n");
    std::vector<std::vector<int>> members;
    for (const auto& mj : get_array(j, "members")) {
        if (!mj.is_array()) throw validation_error("members: every member must be an array");
        std::vector<int> m;
        for (const auto& e : mj) {
            if (!e.is_number_integer())
                throw validation_error("members: elements must be integers");
            m.push_back(e.get<int>());
        }
        members.push_back(std::move(m));
    }
    return Nest(n, std::move(members));
}

// ---------------------------------------------------------------------------
// Profiles and curves

json to_json(const ApproachProfile& p) {
    json rows = json::array();
    for (int i = 1; i <= p.n(); ++i) {
        json row = json::array();
        for (int j = 1; j <= p.n(); ++j)
            row.push_back(i == j ? json(nullptr) : json(to_string(p.exponent(i, j))));
        rows.push_back(std::move(row));
    }
    return json{{"n", p.n()}, {"exponents", rows}};
}

ApproachProfile profile_from_json(const json& j) {
    int n = get_int(j, "n");
    const json& rows = get_array(j, "exponents");
    if (static_cast<int>(rows.size()) != n)
        throw validation_error("exponents: expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Rational>> e(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
            throw validation_error("exponents: row " + std::to_string(i + 1) +
                                   " must have n entries");
        for (int k = 0; k < n; ++k) {
            if (i == k) continue; // diagonal may be null or anything; ignored
            e[i][k] = rational_from_json(rows[i][k], "exponents");
        }
    }
    return ApproachProfile(n, std::move(e));
}

json to_json(const CurveFamily& c) {
    json curves = json::array();
    for (const auto& point : c.coeffs) {
        json coords = json::array();
        for (const auto& coord : point) {
            json cs = json::array();
            for (const auto& v : coord) cs.push_back(to_string(v));
            coords.push_back(std::move(cs));
        }
        curves.push_back(std::move(coords));
    }
    return json{{"n", c.n}, {"m", c.m}, {"curves", curves}};
}

CurveFamily curves_from_json(const json& j) {
    CurveFamily fam;
    fam.n = get_int(j, "n");
    fam.m = get_int(j, "m");
    for (const auto& pj : get_array(j, "curves")) {
        if (!pj.is_array()) throw validation_error("curves: every curve must be an array");
        std::vector<std::vector<Rational>> point;
        for (const auto& cj : pj) {
            if (!cj.is_array())
                throw validation_error("curves: every coordinate must be an array");
            std::vector<Rational> coord;
            for (const auto& v : cj) coord.push_back(rational_from_json(v, "curves"));
            point.push_back(std::move(coord));
        }
        fam.coeffs.push_back(std::move(point));
    }
    return fam;
}

// ---------------------------------------------------------------------------
// Polynomials

json to_json(const UPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return json{{"var", "u"}, {"coeffs", coeffs}};
}

UPoly upoly_from_json(const json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : get_array(j, "coeffs")) coeffs.push_back(bigint_from_json(c, "coeffs"));
    return UPoly(std::move(coeffs));
}

json to_json(const XPoly& p) {
    json coeffs = json::array();
    for (const auto& up : p.coeffs()) {
        json cs = json::array();
        for (const auto& c : up.coeffs()) cs.push_back(to_string(c));
        coeffs.push_back(std::move(cs));
    }
    return json{{"var", "x"}, {"coeffs", coeffs}};
}

XPoly xpoly_from_json(const json& j) {
    std::vector<UPoly> coeffs;
    for (const auto& cj : get_array(j, "coeffs")) {
        if (!cj.is_array()) throw validation_error("coeffs: every entry must be an array");
        std::vector<BigInt> cs;
        for (const auto& c : cj) cs.push_back(bigint_from_json(c, "coeffs"));
        coeffs.emplace_back(std::move(cs));
    }
    return XPoly(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Reports and descriptions

json to_json(const ConsistencyReport& r) {
    json diff = json::array();
    for (int i = 0; i <= r.diff.degree(); ++i) {
        const UPoly& c = r.diff.coeff(i);
        if (c.is_zero()) continue;
        diff.push_back(json{{"x_power", i}, {"u_coeffs", to_json(c)["coeffs"]}});
    }
    return json{{"ok", r.ok}, {"m", r.m}, {"n", r.n}, {"diff", diff}};
}

json to_json(const Brick& b) {
    return json{{"m", b.m()}, {"shape", b.shape().parts()}, {"dim", b.dim()},
                {"simple", b.simple()}};
}

json to_json(const BundleDescription& d) {
    json fibers = json::array();
    for (const auto& b : d.fibers) fibers.push_back(to_json(b));
    return json{{"m", d.m},
                {"n", d.n},
                {"whole_space", d.whole_space},
                {"base", "X<" + std::to_string(d.base_size) + ">"},
                {"base_size", d.base_size},
                {"fibers", fibers},
                {"dim", d.dim},
                {"codim", d.codim}};
}

} // namespace polydiag
