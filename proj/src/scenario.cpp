/*
 * Copyright 2026 The heyde toolkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "heyde/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace heyde {

namespace {

GroupSpecModel parse_group(const KvValue& v, const std::string& where) {
    KvTableReader r(v, where);
    GroupSpecModel g;
    const std::string type = r.require_str("type");
    if (type == "finite") {
        g.kind = GroupSpecModel::Kind::Finite;
        g.moduli = kv_int_list(r.require("moduli"), r.sub_path("moduli"));
    } else if (type == "real_ext") {
        g.kind = GroupSpecModel::Kind::RealExt;
        g.real_dim = static_cast<int>(r.require_int("real_dim"));
        if (const KvValue* m = r.find("moduli"))
            g.moduli = kv_int_list(*m, r.sub_path("moduli"));
    } else if (type == "solenoid_dual") {
        g.kind = GroupSpecModel::Kind::SolenoidDual;
        g.prefix = kv_int_list(r.require("prefix"), r.sub_path("prefix"));
        g.infinite_primes =
            kv_int_list(r.require("infinite_primes"), r.sub_path("infinite_primes"));
    } else if (type == "adic_truncation") {
        g.kind = GroupSpecModel::Kind::AdicTruncation;
        g.prefix = kv_int_list(r.require("prefix"), r.sub_path("prefix"));
        if (const KvValue* p = r.find("infinite_primes"))
            g.infinite_primes = kv_int_list(*p, r.sub_path("infinite_primes"));
        g.level = static_cast<int>(r.require_int("level"));
    } else {
        throw ValidationError(where + ": unknown group type '" + type + "'");
    }
    r.finish();
    return g;
}

AutoSpecModel parse_automorphism(const KvValue& v, const std::string& where) {
    KvTableReader r(v, where);
    AutoSpecModel a;
    if (r.has("p") || r.has("q")) {
        a.kind = AutoSpecModel::Kind::Solenoid;
        a.p = r.require_int("p");
        a.q = r.require_int("q");
        r.finish();
        return a;
    }
    if (r.has("a") || r.has("real_matrix")) {
        a.kind = AutoSpecModel::Kind::RealBlock;
        if (const KvValue* av = r.find("a")) a.a = av->as_real(r.sub_path("a"));
        if (const KvValue* rm = r.find("real_matrix")) {
            const auto m = kv_real_matrix(*rm, r.sub_path("real_matrix"));
            if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
                throw ValidationError(where + ": real_matrix must be 2x2");
            a.has_real_matrix = true;
            a.real_matrix = {{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
        }
        if (const KvValue* fm = r.find("finite_matrix")) {
            a.has_finite_matrix = true;
            for (auto& row : kv_int_matrix(*fm, r.sub_path("finite_matrix")))
                a.matrix.push_back(Coords(row.begin(), row.end()));
        }
        r.finish();
        return a;
    }
    a.kind = AutoSpecModel::Kind::FiniteMatrix;
    for (auto& row : kv_int_matrix(r.require("matrix"), r.sub_path("matrix")))
        a.matrix.push_back(Coords(row.begin(), row.end()));
    r.finish();
    return a;
}

DistSpecModel parse_dist(const KvValue& v, const std::string& where);

DistSpecModel parse_dist_or_ref(const KvValue& v, const std::string& where) {
    if (v.type == KvValue::Type::Str) {
        DistSpecModel d;
        d.type = "ref";
        d.ref = v.s;
        return d;
    }
    return parse_dist(v, where);
}

DistSpecModel parse_dist(const KvValue& v, const std::string& where) {
    KvTableReader r(v, where);
    DistSpecModel d;
    d.type = r.require_str("type");
    if (d.type == "finite") {
        d.probs = kv_real_list(r.require("probs"), r.sub_path("probs"));
    } else if (d.type == "gauss") {
        d.sigma = r.require_real("sigma");
        d.b = r.real_or("b", 0.0);
    } else if (d.type == "quad_gauss") {
        const auto m = kv_real_matrix(r.require("A"), r.sub_path("A"));
        if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
            throw ValidationError(where + ": A must be 2x2");
        d.a_matrix = {{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
        if (const KvValue* b = r.find("b")) {
            const auto bv = kv_real_list(*b, r.sub_path("b"));
            if (bv.size() != 2) throw ValidationError(where + ": b must have 2 entries");
            d.b_vec = {bv[0], bv[1]};
        }
    } else if (d.type == "remark31") {
        d.sigma = r.require_real("sigma");
        d.sigma_prime = r.require_real("sigma_prime");
        d.kappa = r.require_real("kappa");
    } else if (d.type == "solenoid_gauss") {
        d.t = r.real_or("t", 0.0);
        d.sigma = r.require_real("sigma");
    } else if (d.type == "product") {
        for (const KvValue& f : r.require("factors").as_list(r.sub_path("factors")))
            d.children.push_back(parse_dist_or_ref(f, r.sub_path("factors")));
        if (d.children.size() != 2)
            throw ValidationError(where + ": product needs exactly 2 factors "
                                          "(real part, finite part)");
    } else if (d.type == "convolve") {
        for (const KvValue& f : r.require("parts").as_list(r.sub_path("parts")))
            d.children.push_back(parse_dist_or_ref(f, r.sub_path("parts")));
        if (d.children.size() < 2)
            throw ValidationError(where + ": convolve needs at least 2 parts");
    } else if (d.type == "shift") {
        d.children.push_back(parse_dist_or_ref(r.require("base"), r.sub_path("base")));
        if (const KvValue* g = r.find("g")) {
            const auto gv = kv_int_list(*g, r.sub_path("g"));
            d.g_shift = Coords(gv.begin(), gv.end());
            d.has_g_shift = true;
        }
        if (const KvValue* x = r.find("x")) {
            const auto gv = kv_int_list(*x, r.sub_path("x"));
            d.g_shift = Coords(gv.begin(), gv.end());
            d.has_g_shift = true;
        }
        d.t_shift = r.real_or("t", 0.0);
    } else {
        throw ValidationError(where + ": unknown distribution type '" + d.type + "'");
    }
    r.finish();
    return d;
}

const std::set<std::string>& known_check_kinds() {
    static const std::set<std::string> kinds = {
        "condition1",   "eq2_exact",       "eq2_grid",        "eq5",
        "cond_sym_exact", "cond_sym_mc",   "pd_inequality",   "decompose",
        "truncation_kernel", "oracle_fuzz", "polynomial_fuzz", "gauss_phi_degenerate",
    };
    return kinds;
}

CheckSpecModel parse_check(const KvValue& v, const std::string& where, int index) {
    KvTableReader r(v, where);
    CheckSpecModel c;
    c.kind = r.require_str("kind");
    if (known_check_kinds().count(c.kind) == 0)
        throw ValidationError(where + ": unknown check kind '" + c.kind + "'");
    c.name = r.str_or("name", c.kind + "#" + std::to_string(index));
    c.mu = r.str_or("mu", "mu");
    c.mu1 = r.str_or("mu1", "mu1");
    c.mu2 = r.str_or("mu2", "mu2");
    if (const KvValue* e = r.find("expect"))
        c.expect = normalize_expect(c.kind, *e, r.sub_path("expect"));
    if (const KvValue* a = r.find("automorphism"))
        c.automorphism = parse_automorphism(*a, r.sub_path("automorphism"));
    c.samples = r.int_or("n", c.samples);
    c.bins = r.int_or("bins", c.bins);
    c.instances = r.int_or("instances", c.instances);
    c.max_order = r.int_or("max_order", c.max_order);
    c.functions = r.int_or("functions", c.functions);
    c.max_modulus = r.int_or("max_modulus", c.max_modulus);
    c.degrees = r.int_or("degrees", c.degrees);
    c.levels = r.int_or("levels", c.levels);
    c.multiplier = r.int_or("multiplier", c.multiplier);
    c.torsion = r.str_or("torsion", c.torsion);
    if (const KvValue* te = r.find("torsion_elements")) {
        for (auto& row : kv_int_matrix(*te, r.sub_path("torsion_elements")))
            c.torsion_elements.push_back(Coords(row.begin(), row.end()));
        c.torsion = "explicit";
    }
    if (c.torsion == "explicit" && c.torsion_elements.empty())
        throw ValidationError(where + ": torsion = \"explicit\" needs torsion_elements");
    if (c.torsion != "auto" && c.torsion != "trivial" && c.torsion != "explicit")
        throw ValidationError(where + ": torsion must be auto, trivial or explicit");
    r.finish();
    return c;
}

} // namespace

std::string normalize_expect(const std::string& kind, const KvValue& value,
                             const std::string& where) {
    std::string token;
    if (value.type == KvValue::Type::Bool) {
        const bool b = value.b;
        if (kind == "eq2_exact" || kind == "eq2_grid" || kind == "eq5")
            token = b ? "holds" : "fails";
        else if (kind == "cond_sym_mc")
            token = b ? "consistent" : "refuted";
        else if (kind == "decompose")
            token = b ? "success" : "failure";
        else if (kind == "truncation_kernel")
            token = b ? "trivial" : "nontrivial";
        else if (kind == "oracle_fuzz")
            token = b ? "agree" : "disagree";
        else if (kind == "polynomial_fuzz")
            token = b ? "realized" : "violated";
        else if (kind == "gauss_phi_degenerate")
            token = b ? "degenerate" : "nondegenerate";
        else
            token = b ? "true" : "false";
    } else {
        token = value.as_str(where);
    }
    static const std::set<std::string> valid = {
        "true",    "false",   "holds",      "fails",   "consistent",   "refuted",
        "success", "failure", "trivial",    "nontrivial", "agree",     "disagree",
        "realized", "violated", "degenerate", "nondegenerate",
    };
    if (valid.count(token) == 0)
        throw ValidationError(where + ": unknown expectation '" + token + "'");
    return token;
}

Scenario parse_scenario(const std::string& text, const std::string& fallback_name) {
    const KvValue root = kv_parse(text);
    KvTableReader r(root, "scenario");
    Scenario sc;

    const std::int64_t schema = r.require_int("schema");
    if (schema != 1)
        throw ValidationError("unsupported schema version " + std::to_string(schema));

    sc.name = r.str_or("name", fallback_name);
    sc.description = r.str_or("description", "");
    sc.seed = static_cast<std::uint64_t>(r.int_or("seed", 0));
    if (const KvValue* g = r.find("group")) sc.group = parse_group(*g, "group");
    if (const KvValue* a = r.find("automorphism"))
        sc.automorphism = parse_automorphism(*a, "automorphism");
    if (const KvValue* g = r.find("grid")) {
        KvTableReader gr(*g, "grid");
        sc.grid.min = gr.real_or("min", sc.grid.min);
        sc.grid.max = gr.real_or("max", sc.grid.max);
        sc.grid.step = gr.real_or("step", sc.grid.step);
        gr.finish();
    }
    if (const KvValue* sp = r.find("solenoid_points")) {
        KvTableReader gr(*sp, "solenoid_points");
        sc.solenoid_points.max_level =
            static_cast<int>(gr.int_or("level_max", sc.solenoid_points.max_level));
        sc.solenoid_points.numerator_max =
            gr.int_or("numerator_max", sc.solenoid_points.numerator_max);
        gr.finish();
    }
    if (const KvValue* t = r.find("tolerances")) {
        KvTableReader tr(*t, "tolerances");
        sc.tol_grid = tr.real_or("grid", sc.tol_grid);
        sc.tol_exact = tr.real_or("exact", sc.tol_exact);
        tr.finish();
    }
    if (const KvValue* dists = r.find("dist")) {
        KvTableReader dr(*dists, "dist");
        for (const auto& [name, spec] : dists->table) {
            (void)dr.find(name);
            sc.dists.emplace_back(name, parse_dist(spec, "dist." + name));
        }
        dr.finish();
    }
    int index = 1;
    for (const KvValue* c : r.find_all("check"))
        sc.checks.push_back(parse_check(*c, "check #" + std::to_string(index), index)), ++index;
    r.finish();

    std::set<std::string> names;
    for (const auto& [name, spec] : sc.dists)
        if (!names.insert(name).second)
            throw ValidationError("distribution '" + name + "' is defined twice");
    if (sc.checks.empty() && sc.dists.empty() && !sc.group)
        throw ValidationError("scenario defines nothing to run");
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string stem = path;
    if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos)
        stem = stem.substr(0, dot);
    return parse_scenario(buf.str(), stem);
}

} // namespace heyde
