#include "qleaf/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qleaf {

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line:column pair.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw input_error(path + ":" + std::to_string(line) + ":" +
                          std::to_string(col) + ": " + e.what());
    }
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw input_error("quiver JSON needs 'vertices' and 'arrows'");
    std::vector<std::string> names;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string())
            throw input_error("quiver vertices must be strings");
        names.push_back(v.get<std::string>());
    }
    Quiver lookup(names, {});
    std::vector<Quiver::Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string() ||
            !a[1].is_string())
            throw input_error("each arrow must be a [tail, head] name pair");
        auto tail = lookup.index_of(a[0].get<std::string>());
        auto head = lookup.index_of(a[1].get<std::string>());
        if (!tail || !head)
            throw input_error("arrow references undeclared vertex '" +
                              (tail ? a[1] : a[0]).get<std::string>() + "'");
        arrows.emplace_back(*tail, *head);
    }
    return Quiver(std::move(names), std::move(arrows));
}

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& [tail, head] : q.arrows())
        arrows.push_back({q.vertex_name(tail), q.vertex_name(head)});
    return json{{"vertices", q.vertex_names()}, {"arrows", arrows}};
}

DimVector dim_vector_from_json(const json& j, Eigen::Index expected) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != expected)
        throw input_error("expected an integer array of length " +
                          std::to_string(expected));
    DimVector v(expected);
    for (Eigen::Index i = 0; i < expected; ++i) {
        const auto& e = j[static_cast<std::size_t>(i)];
        if (!e.is_number_integer())
            throw input_error("dimension vector entries must be integers");
        v[i] = e.get<Int>();
    }
    return v;
}

json dim_vector_to_json(const DimVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

namespace {
Cyc cyc_from_json_value(const json& e) {
    if (e.is_number_integer()) return Cyc(e.get<Int>());
    if (e.is_string()) return Cyc::parse(e.get<std::string>());
    throw input_error("parameter entries must be integers or strings");
}
}  // namespace

Parameter parameter_from_json(const json& j, Eigen::Index expected) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != expected)
        throw input_error("expected a parameter array of length " +
                          std::to_string(expected));
    Parameter lam(expected);
    for (Eigen::Index i = 0; i < expected; ++i)
        lam[i] = cyc_from_json_value(j[static_cast<std::size_t>(i)]);
    return lam;
}

json parameter_to_json(const Parameter& lam) {
    json out = json::array();
    for (Eigen::Index i = 0; i < lam.size(); ++i) out.push_back(lam[i].str());
    return out;
}

namespace {
// Splits on commas that are not inside brackets, so cyclotomic literals
// survive.
std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char ch : text) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    out.push_back(current);
    return out;
}
}  // namespace

DimVector dim_vector_from_csv(const std::string& text, Eigen::Index expected) {
    auto tokens = split_csv(text);
    if (static_cast<Eigen::Index>(tokens.size()) != expected)
        throw input_error("expected " + std::to_string(expected) +
                          " comma-separated integers, got '" + text + "'");
    DimVector v(expected);
    for (Eigen::Index i = 0; i < expected; ++i) {
        try {
            v[i] = std::stoll(tokens[static_cast<std::size_t>(i)]);
        } catch (const std::exception&) {
            throw input_error("invalid integer '" +
                              tokens[static_cast<std::size_t>(i)] + "'");
        }
    }
    return v;
}

Parameter parameter_from_csv(const std::string& text, Eigen::Index expected) {
    auto tokens = split_csv(text);
    if (static_cast<Eigen::Index>(tokens.size()) != expected)
        throw input_error("expected " + std::to_string(expected) +
                          " comma-separated values, got '" + text + "'");
    Parameter lam(expected);
    for (Eigen::Index i = 0; i < expected; ++i)
        lam[i] = Cyc::parse(tokens[static_cast<std::size_t>(i)]);
    return lam;
}

namespace {
Rat rat_from_json_value(const json& e) {
    if (e.is_number_integer()) return Rat(e.get<Int>());
    if (e.is_string()) return Rat::parse(e.get<std::string>());
    throw input_error("matrix entries must be integers or rational strings");
}
}  // namespace

Representation representation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("quiver") || !j.contains("alpha"))
        throw input_error("representation JSON needs 'quiver' and 'alpha'");
    Quiver base = quiver_from_json(j.at("quiver"));
    DimVector alpha = dim_vector_from_json(j.at("alpha"), base.vertex_count());
    Quiver doubled = double_quiver(base);
    const auto& arrows = doubled.arrows();
    std::vector<RatMatrix> mats;
    mats.reserve(arrows.size());
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& [tail, head] = arrows[k];
        mats.push_back(RatMatrix::Zero(alpha[head], alpha[tail]));
    }
    if (j.contains("matrices")) {
        const auto& entries = j.at("matrices");
        if (!entries.is_object())
            throw input_error("'matrices' must map arrow indices to matrices");
        for (auto it = entries.begin(); it != entries.end(); ++it) {
            const std::string& key = it.key();
            if (key.empty() || key.size() > 9 ||
                key.find_first_not_of("0123456789") != std::string::npos)
                throw input_error("matrix key '" + key +
                                  "' is not an arrow index");
            std::size_t k = std::stoul(key);
            if (k >= arrows.size())
                throw input_error("matrix key " + std::to_string(k) +
                                  " exceeds doubled arrow count " +
                                  std::to_string(arrows.size()));
            const auto& rows = *it;
            const auto& [tail, head] = arrows[k];
            if (!rows.is_array() ||
                static_cast<Eigen::Index>(rows.size()) != alpha[head])
                throw input_error("matrix for arrow " + std::to_string(k) +
                                  " must have " + std::to_string(alpha[head]) +
                                  " rows");
            for (Eigen::Index r = 0; r < alpha[head]; ++r) {
                const auto& row = rows[static_cast<std::size_t>(r)];
                if (!row.is_array() ||
                    static_cast<Eigen::Index>(row.size()) != alpha[tail])
                    throw input_error(
                        "matrix for arrow " + std::to_string(k) + " must be " +
                        std::to_string(alpha[head]) + "x" +
                        std::to_string(alpha[tail]));
                for (Eigen::Index c = 0; c < alpha[tail]; ++c)
                    mats[k](r, c) =
                        rat_from_json_value(row[static_cast<std::size_t>(c)]);
            }
        }
    }
    return Representation(base, std::move(alpha), std::move(mats));
}

json rat_matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

json decomposition_to_json(const Quiver& q, const Decomposition& d) {
    json parts = json::array();
    for (const auto& [vec, mult] : d.parts)
        parts.push_back(json::array({mult, dim_vector_to_json(vec)}));
    return json{{"parts", parts}, {"p_sum", d.p_sum(q)}};
}

json rep_type_to_json(const RepType& t) {
    json entries = json::array();
    for (const auto& [mult, vec] : t.entries)
        entries.push_back(json::array({mult, dim_vector_to_json(vec)}));
    return entries;
}

json report_shell(const std::string& command, json inputs) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"inputs", std::move(inputs)}};
}

}  // namespace

json roots_report(const Quiver& q, const DimVector& bound,
                  const std::optional<Parameter>& lam, json inputs) {
    json out = report_shell("roots", std::move(inputs));
    json list = json::array();
    if (lam) {
        for (const auto& v : r_lambda_positive(q, *lam, bound))
            list.push_back(json{{"vector", dim_vector_to_json(v)},
                                {"class", to_string(classify_root(q, v))}});
        out["lambda"] = parameter_to_json(*lam);
    } else {
        for (const auto& cr : positive_roots_upto(q, bound))
            list.push_back(json{{"vector", dim_vector_to_json(cr.vec)},
                                {"class", to_string(cr.cls)}});
    }
    out["bound"] = dim_vector_to_json(bound);
    out["count"] = list.size();
    out["roots"] = std::move(list);
    return out;
}

json sigma_report(const Quiver& q, const Parameter& lam,
                  const DimVector& bound, json inputs) {
    json out = report_shell("sigma", std::move(inputs));
    json list = json::array();
    for (const auto& v : sigma_lambda_upto(q, lam, bound))
        list.push_back(dim_vector_to_json(v));
    out["bound"] = dim_vector_to_json(bound);
    out["lambda"] = parameter_to_json(lam);
    out["count"] = list.size();
    out["sigma"] = std::move(list);
    return out;
}

json decompose_report(const Quiver& q, const Parameter& lam,
                      const DimVector& alpha, const DimVector& bound,
                      json inputs) {
    json out = report_shell("decompose", std::move(inputs));
    auto all = decompositions(q, lam, alpha, bound);
    if (all.empty())
        throw not_representable_error(
            "no decomposition into simple dimension vectors exists");
    std::size_t canonical = verify_canonical(q, all);
    json list = json::array();
    Int best = 0;
    for (const auto& d : all) {
        best = std::max(best, d.p_sum(q));
        list.push_back(decomposition_to_json(q, d));
    }
    out["alpha"] = dim_vector_to_json(alpha);
    out["lambda"] = parameter_to_json(lam);
    out["decompositions"] = std::move(list);
    out["canonical"] = decomposition_to_json(q, all[canonical]);
    out["alpha_norm"] = best;
    return out;
}

json smooth_report(const Quiver& q, const Parameter& lam,
                   const DimVector& alpha, const DimVector& bound,
                   json inputs) {
    json out = report_shell("smooth", std::move(inputs));
    auto result = is_smooth(q, lam, alpha, bound);
    out["alpha"] = dim_vector_to_json(alpha);
    out["lambda"] = parameter_to_json(lam);
    out["smooth"] = result.smooth;
    if (result.extra_decomposition)
        out["witness"] = json{
            {"second_decomposition",
             decomposition_to_json(q, *result.extra_decomposition)}};
    else if (result.repeated_part)
        out["witness"] =
            json{{"part", dim_vector_to_json(result.repeated_part->first)},
                 {"multiplicity", result.repeated_part->second}};
    else
        out["witness"] = nullptr;
    return out;
}

json leaves_report(const Quiver& q, const Parameter& lam,
                   const DimVector& alpha, const DimVector& bound,
                   json inputs) {
    json out = report_shell("leaves", std::move(inputs));
    auto strata = leaves(q, lam, alpha, bound);
    auto smooth = is_smooth(q, lam, alpha, bound);
    Int top = 0;
    json list = json::array();
    for (const auto& s : strata) {
        top = std::max(top, s.dim);
        list.push_back(json{{"rep_type", rep_type_to_json(s.rep_type)},
                            {"dim", s.dim}});
    }
    out["alpha"] = dim_vector_to_json(alpha);
    out["lambda"] = parameter_to_json(lam);
    out["smooth"] = smooth.smooth;
    out["variety_dim"] = top;
    out["leaves"] = std::move(list);
    return out;
}

json mckay_info_report(const GammaData& g, json inputs) {
    json out = report_shell("mckay-info", std::move(inputs));
    out["group"] = g.name;
    out["order"] = g.group_order;
    out["exponent"] = g.exponent;
    json classes = json::array();
    for (const auto& c : g.classes)
        classes.push_back(json{{"label", c.label},
                               {"size", c.size},
                               {"element_order", c.element_order},
                               {"inverse_class", c.inverse_class}});
    out["classes"] = std::move(classes);
    json table = json::array();
    for (const auto& row : g.char_table) {
        json r = json::array();
        for (const auto& value : row) r.push_back(value.str());
        table.push_back(std::move(r));
    }
    out["character_table"] = std::move(table);
    json chi_l = json::array();
    for (const auto& value : g.chi_l) chi_l.push_back(value.str());
    out["chi_l"] = std::move(chi_l);
    out["quiver"] = quiver_to_json(g.quiver);
    out["delta"] = dim_vector_to_json(g.delta);
    out["extending_vertex"] = g.extending_vertex;
    return out;
}

json check_rep_report(const Representation& r, const Parameter& lam,
                      json inputs) {
    json out = report_shell("check-rep", std::move(inputs));
    out["alpha"] = dim_vector_to_json(r.alpha());
    out["lambda"] = parameter_to_json(lam);
    Cyc pairing = dot(lam, r.alpha());
    out["lambda_dot_alpha"] = pairing.str();
    auto mu = moment_map(r);
    json mu_json = json::array();
    for (const auto& m : mu) mu_json.push_back(rat_matrix_to_json(m));
    out["moment_map"] = std::move(mu_json);
    bool ok = check_preprojective(r, lam);
    out["preprojective"] = ok;
    if (!ok)
        out["reason"] = pairing.is_zero()
                            ? "moment map differs from lambda at some vertex"
                            : "lambda-dot-alpha nonzero";
    else
        out["reason"] = nullptr;
    return out;
}

}  // namespace qleaf
