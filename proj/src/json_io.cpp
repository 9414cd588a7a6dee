#include "convord/json_io.hpp"

#include <sstream>

namespace convord {

namespace {

json matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

IntMat matrix_from_json(const json& j) {
    IntMat m(int(j.size()));
    for (int i = 0; i < m.n; ++i) {
        if (int(j.at(size_t(i)).size()) != m.n)
            throw std::invalid_argument("matrix_from_json: not square");
        for (int k = 0; k < m.n; ++k) m(i, k) = j.at(size_t(i)).at(size_t(k)).get<Int>();
    }
    return m;
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

json to_json(const CartanData& c) {
    return json{{"type", std::string(1, c.type_label)},
                {"rank", c.rank},
                {"cartan", matrix_to_json(c.cartan)},
                {"labels", c.labels}};
}

CartanData cartan_from_json(const json& j) {
    std::string t = j.at("type").get<std::string>();
    if (t.size() != 1) throw std::invalid_argument("cartan_from_json: bad type label");
    CartanData c = build_cartan(t[0], j.at("rank").get<int>());
    if (j.contains("cartan") && matrix_from_json(j.at("cartan")) != c.cartan)
        throw std::invalid_argument("cartan_from_json: cartan matrix mismatch");
    if (j.contains("labels") && j.at("labels").get<std::vector<Int>>() != c.labels)
        throw std::invalid_argument("cartan_from_json: label mismatch");
    return c;
}

json to_json(const Root& r) { return json{{"level", r.level}, {"finite", r.finite}}; }

Root root_from_json(const json& j, int rank) {
    Root r{j.at("level").get<Int>(), j.at("finite").get<IntVec>()};
    if (int(r.finite.size()) != rank) throw std::invalid_argument("root_from_json: wrong rank");
    return r;
}

json to_json(const AffineWeylElement& x) {
    json tau = json::array();
    for (const auto& t : x.tau) tau.push_back(rat_to_string(t));
    return json{{"translation", tau}, {"finite_matrix", matrix_to_json(x.fin)}};
}

AffineWeylElement affine_from_json(const json& j, const CartanData& c) {
    AffineWeylElement x;
    for (const auto& t : j.at("translation")) x.tau.push_back(rat_from_string(t.get<std::string>()));
    x.fin = matrix_from_json(j.at("finite_matrix"));
    if (int(x.tau.size()) != c.rank || x.fin.n != c.rank)
        throw std::invalid_argument("affine_from_json: wrong rank");
    validate_lattice(c, x.tau);
    if (!in_finite_weyl(c, full_index_set(c), FiniteWeylElement{x.fin}))
        throw std::invalid_argument("affine_from_json: finite part not a Weyl element");
    return x;
}

json to_json(const CartanData& c, const BiconvexParam& p) {
    (void)c;
    return json{{"J", p.J}, {"K", p.K}, {"u_matrix", matrix_to_json(p.u.mat)},
                {"y", to_json(p.y)}};
}

BiconvexParam biconvex_param_from_json(const CartanData& c, const json& j) {
    BiconvexParam p;
    p.J = j.at("J").get<std::vector<int>>();
    p.K = j.at("K").get<std::vector<int>>();
    p.u = FiniteWeylElement{matrix_from_json(j.at("u_matrix"))};
    p.y = affine_from_json(j.at("y"), c);
    return p;
}

json to_json(const InfiniteWord& w) {
    json prefix = json::array(), period = json::array();
    for (int k : w.prefix) prefix.push_back(w.sub.gen_ids[size_t(k)]);
    for (int k : w.period) period.push_back(w.sub.gen_ids[size_t(k)]);
    return json{{"J", w.sub.J}, {"prefix", prefix}, {"period", period}};
}

InfiniteWord word_from_json(const CartanData& c, const json& j) {
    auto sub = build_subsystem(c, j.at("J").get<std::vector<int>>());
    auto letters = [&](const json& arr) {
        std::vector<int> out;
        for (const auto& id : arr) {
            std::string s = id.get<std::string>();
            auto it = std::find(sub.gen_ids.begin(), sub.gen_ids.end(), s);
            if (it == sub.gen_ids.end())
                throw std::invalid_argument("word_from_json: unknown generator " + s);
            out.push_back(int(it - sub.gen_ids.begin()));
        }
        return out;
    };
    return make_word(sub, letters(j.at("prefix")), letters(j.at("period")));
}

json to_json(const CartanData& c, const RowParam& rows) {
    json kchain = json::array();
    for (const auto& k : rows.chain.K_chain) kchain.push_back(k);
    json ychain = json::array();
    for (const auto& y : rows.chain.y_chain) ychain.push_back(to_json(y));
    json words = json::array();
    for (const auto& w : rows.words) words.push_back(to_json(w));
    (void)c;
    return json{{"J", rows.chain.J},
                {"w_matrix", matrix_to_json(rows.chain.w.mat)},
                {"K_chain", kchain},
                {"y_chain", ychain},
                {"words", words}};
}

RowParam rowparam_from_json(const CartanData& c, const json& j) {
    RowParam rows;
    rows.chain.J = j.at("J").get<std::vector<int>>();
    rows.chain.w = FiniteWeylElement{matrix_from_json(j.at("w_matrix"))};
    for (const auto& k : j.at("K_chain")) rows.chain.K_chain.push_back(k.get<std::vector<int>>());
    for (const auto& y : j.at("y_chain")) rows.chain.y_chain.push_back(affine_from_json(y, c));
    for (const auto& w : j.at("words")) rows.words.push_back(word_from_json(c, w));
    validate_rows(c, rows);
    return rows;
}

json to_json(const Subsystem& s) {
    json pi = json::array();
    for (const auto& r : s.pi) pi.push_back(to_json(r));
    json gens = json::array();
    for (const auto& g : s.gens) gens.push_back(to_json(g));
    return json{{"J", s.J}, {"pi", pi}, {"generators", gens}};
}

json to_json(const OrderSpec& spec) {
    return json{{"cartan", to_json(spec.cartan)},
                {"w_matrix", matrix_to_json(spec.w.mat)},
                {"negative", to_json(spec.cartan, spec.negative.rows())},
                {"imaginary", json{{"perm", spec.imaginary.perm}}},
                {"positive", to_json(spec.cartan, spec.positive.rows())}};
}

OrderSpec orderspec_from_json(const json& j, Window verify_window) {
    CartanData c = cartan_from_json(j.at("cartan"));
    FiniteWeylElement w{matrix_from_json(j.at("w_matrix"))};
    ImaginaryOrder im;
    if (j.contains("imaginary")) im.perm = j.at("imaginary").at("perm").get<std::vector<Int>>();
    auto neg = rowparam_from_json(c, j.at("negative"));
    auto pos = rowparam_from_json(c, j.at("positive"));
    if (verify_window.max_level >= 1)
        return build_order(c, w, std::move(neg), std::move(im), std::move(pos), verify_window);
    return assemble_order(c, w, std::move(neg), std::move(im), std::move(pos));
}

}  // namespace convord
