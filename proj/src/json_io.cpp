#include "dtour/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "dtour/error.hpp"

namespace dtour {

namespace {

int get_int(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ParseError(std::string("missing or non-integer field '") + key + "'");
    return j.at(key).get<int>();
}

int checked_sign(const Json& v)
{
    if (!v.is_number_integer())
        throw ParseError("sign must be an integer");
    const auto s = v.get<long long>();
    if (s < -1 || s > 1)
        throw ParseError("sign " + std::to_string(s) + " outside {-1, 0, 1}");
    return static_cast<int>(s);
}

Face face_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("face must be an array of vertices");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ParseError("face vertices must be integers");
        v.push_back(x.get<int>());
    }
    try {
        return Face::from_unsorted(std::move(v));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Face face_from_key(const std::string& key)
{
    std::vector<int> v;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw ParseError("bad face key '" + key + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad face key '" + key + "'");
        }
    }
    try {
        return Face::from_unsorted(std::move(v));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw ParseError("rational values must be strings like \"p/q\"");
}

}  // namespace

Json face_json(const Face& f)
{
    Json a = Json::array();
    for (int v : f)
        a.push_back(v);
    return a;
}

Json to_json(const Tournament& t)
{
    Json signs = Json::array();
    for (auto s : t.signs())
        signs.push_back(static_cast<int>(s));
    return Json{{"n", t.n()}, {"d", t.d()}, {"signs", std::move(signs)}};
}

Tournament tournament_from_json(const Json& j)
{
    if (!j.is_object())
        throw ParseError("tournament must be a JSON object");
    const int n = get_int(j, "n");
    const int d = get_int(j, "d");
    if (d < 0 || n < d + 1 || n > 4096)
        throw ParseError("tournament needs 0 <= d and d + 1 <= n <= 4096");
    std::uint64_t count = 0;
    try {
        count = binomial(n, d + 1);
    } catch (const std::overflow_error&) {
        count = UINT64_MAX;
    }
    if (count > (std::uint64_t{1} << 28))
        throw ParseError("tournament has too many faces");
    const bool has_signs = j.contains("signs");
    const bool has_faces = j.contains("faces");
    if (has_signs == has_faces)
        throw ParseError("tournament needs exactly one of 'signs' or 'faces'");
    Tournament t(n, d);
    if (has_signs) {
        const auto& s = j.at("signs");
        if (!s.is_array())
            throw ParseError("'signs' must be an array");
        if (s.size() != count)
            throw ParseError("'signs' has " + std::to_string(s.size()) + " entries, expected C(n, d+1) = " +
                             std::to_string(count));
        for (std::size_t r = 0; r < s.size(); ++r)
            t.set_sign(r, checked_sign(s[r]));
        return t;
    }
    const auto& faces = j.at("faces");
    if (!faces.is_array())
        throw ParseError("'faces' must be an array");
    std::vector<bool> seen(count, false);
    for (const auto& entry : faces) {
        if (!entry.is_object() || !entry.contains("face") || !entry.contains("sign"))
            throw ParseError("each face entry needs 'face' and 'sign'");
        const Face f = face_from_json(entry.at("face"));
        if (f.size() != d + 1 || f.max() > n)
            throw ParseError("face " + f.key() + " does not fit n and d");
        const auto r = static_cast<std::size_t>(face_rank(f, n));
        if (seen[r])
            throw ParseError("face " + f.key() + " listed twice");
        seen[r] = true;
        t.set_sign(r, checked_sign(entry.at("sign")));
    }
    return t;
}

std::string serialize(const Tournament& t)
{
    return to_json(t).dump();
}

Tournament parse_tournament(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return tournament_from_json(j);
}

Json to_json(const CycleCertificate& c)
{
    Json w = Json::object();
    for (std::size_t i = 0; i < c.support.size(); ++i)
        w[c.support[i].key()] = to_string(c.weights[i]);
    return Json{{"kind", "cycle"}, {"weights", std::move(w)}};
}

Json chamber_certificate_json(const PositiveCertificate& c, int n, int d)
{
    Json y = Json::object();
    for (std::size_t r = 0; r < c.y.size(); ++r)
        y[face_unrank(r, d, n).key()] = to_string(c.y[r]);
    return Json{{"kind", "chamber"}, {"y", std::move(y)}};
}

Json to_json(const ZeroOneCycle& c)
{
    Json faces = Json::array();
    for (const auto& f : c.faces)
        faces.push_back(face_json(f));
    return Json{{"kind", "zero-one"}, {"faces", std::move(faces)}};
}

Json to_json(const CollapseWitness& w)
{
    Json steps = Json::array();
    for (const auto& s : w.steps) {
        Json removed = Json::array();
        for (const auto& f : s.removed)
            removed.push_back(face_json(f));
        steps.push_back(Json{{"free", face_json(s.free_face)}, {"removed", std::move(removed)}});
    }
    return Json{{"steps", std::move(steps)}};
}

CollapseWitness collapse_witness_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array())
        throw ParseError("collapse witness needs a 'steps' array");
    CollapseWitness w;
    for (const auto& s : j.at("steps")) {
        if (!s.contains("free") || !s.contains("removed") || !s.at("removed").is_array())
            throw ParseError("collapse step needs 'free' and 'removed'");
        CollapseStep step{face_from_json(s.at("free")), {}};
        for (const auto& f : s.at("removed"))
            step.removed.push_back(face_from_json(f));
        w.steps.push_back(std::move(step));
    }
    return w;
}

Json to_json(const PointConfiguration& p)
{
    Json pts = Json::array();
    for (const auto& pt : p.points) {
        Json coords = Json::array();
        for (const auto& c : pt)
            coords.push_back(to_string(c));
        pts.push_back(std::move(coords));
    }
    return Json{{"d", p.d}, {"points", std::move(pts)}};
}

PointConfiguration points_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
        throw ParseError("point file needs a 'points' array");
    PointConfiguration p{get_int(j, "d"), {}};
    if (p.d < 1)
        throw ParseError("point dimension must be at least 1");
    for (const auto& pt : j.at("points")) {
        if (!pt.is_array() || static_cast<int>(pt.size()) != p.d)
            throw ParseError("every point needs exactly d coordinates");
        std::vector<Rational> coords;
        for (const auto& c : pt)
            coords.push_back(rational_from_json(c));
        p.points.push_back(std::move(coords));
    }
    return p;
}

Json to_json(const ChamberPoint& x)
{
    Json coords = Json::object();
    for (std::size_t r = 0; r < x.x.size(); ++r)
        coords[face_unrank(r, x.d, x.n).key()] = to_string(x.x[r]);
    return Json{{"n", x.n}, {"d", x.d}, {"x", std::move(coords)}};
}

ChamberPoint chamber_point_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("x") || !j.at("x").is_object())
        throw ParseError("chamber point needs an 'x' object");
    const auto& coords = j.at("x");
    if (coords.empty())
        throw ParseError("chamber point has no coordinates");
    std::vector<std::pair<Face, Rational>> entries;
    int d = -1;
    int n = 0;
    for (auto it = coords.begin(); it != coords.end(); ++it) {
        Face f = face_from_key(it.key());
        if (d >= 0 && f.size() != d)
            throw ParseError("chamber coordinates must all be indexed by d-subsets");
        d = f.size();
        n = std::max(n, f.empty() ? 0 : f.max());
        entries.emplace_back(std::move(f), rational_from_json(it.value()));
    }
    if (j.contains("d") && get_int(j, "d") != d)
        throw ParseError("'d' disagrees with the coordinate keys");
    if (j.contains("n")) {
        const int declared = get_int(j, "n");
        if (declared < n)
            throw ParseError("'n' is smaller than a vertex in the coordinate keys");
        n = declared;
    }
    if (d < 1 || n < d + 1)
        throw ParseError("chamber point needs d >= 1 and n >= d + 1");
    ChamberPoint x{n, d, std::vector<Rational>(static_cast<std::size_t>(binomial(n, d)))};
    if (entries.size() != x.x.size())
        throw ParseError("chamber point needs all C(n, d) coordinates");
    std::vector<bool> seen(x.x.size(), false);
    for (auto& [f, value] : entries) {
        const auto r = static_cast<std::size_t>(face_rank(f, n));
        if (seen[r])
            throw ParseError("coordinate " + f.key() + " listed twice");
        seen[r] = true;
        x.x[r] = std::move(value);
    }
    return x;
}

Json to_json(const ExtractionStep& s)
{
    return Json{{"tau", face_json(s.tau)},
                {"below", s.below},
                {"positive", s.positive},
                {"negative", s.negative},
                {"eliminated", s.eliminated}};
}

Json to_json(const CensusReport& r)
{
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"n", r.n},
                {"d", r.d},
                {"total", r.total},
                {"acyclic", opt(r.acyclic)},
                {"collapsible", opt(r.collapsible)},
                {"zero_one_acyclic", opt(r.zero_one_acyclic)},
                {"d2_cycle_free", opt(r.d2_cycle_free)},
                {"realizable_hits", opt(r.realizable_hits)},
                {"chain_violations", r.chain_violations},
                {"distinct_degree_sequences", r.distinct_degree_sequences},
                {"max_acyclic_degree_multiplicity", opt(r.max_acyclic_degree_multiplicity)}};
}

std::string census_csv(const CensusReport& r)
{
    const Json j = to_json(r);
    std::string header;
    std::string row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += it.key();
        row += it.value().is_null() ? "" : it.value().dump();
    }
    return header + "\n" + row + "\n";
}

std::string read_text(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace dtour
