#include "cherednik/config.hpp"

#include <fstream>
#include <sstream>

namespace cherednik {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Rational parse_rational(const std::string& v, int line) {
    try {
        std::size_t slash = v.find('/');
        if (slash == std::string::npos) return Rational(Integer(v));
        return Rational(Integer(strip(v.substr(0, slash))), Integer(strip(v.substr(slash + 1))));
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": bad rational '" + v + "'");
    }
}

unsigned parse_unsigned(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        unsigned long x = std::stoul(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return unsigned(x);
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": bad integer '" + v + "'");
    }
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = strip(s.substr(0, eq));
        std::string val = strip(s.substr(eq + 1));
        cfg.raw[key] = val;
        if (key == "field.cyclotomic_order") {
            cfg.cyclotomic_order = parse_unsigned(val, lineno);
        } else if (key == "field.prime") {
            cfg.prime = Integer(val);
        } else if (key == "field.precision") {
            cfg.precision = parse_unsigned(val, lineno);
        } else if (key == "group.family") {
            cfg.family = val;
        } else if (key == "group.rank") {
            cfg.rank = parse_unsigned(val, lineno);
        } else if (key == "group.m") {
            cfg.group_m = parse_unsigned(val, lineno);
        } else if (key == "params.t") {
            cfg.t = parse_rational(val, lineno);
        } else if (key.rfind("params.c.", 0) == 0) {
            cfg.c[parse_unsigned(key.substr(9), lineno)] = parse_rational(val, lineno);
        } else if (key.rfind("params.omega.", 0) == 0) {
            std::string rest = key.substr(13);
            std::size_t dot = rest.find('.');
            if (dot == std::string::npos)
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": omega key needs two indices");
            unsigned i = parse_unsigned(rest.substr(0, dot), lineno);
            unsigned j = parse_unsigned(rest.substr(dot + 1), lineno);
            if (i == 0 || j == 0 || i >= j)
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": omega indices must be 1-based with i < j");
            cfg.omega[{i, j}] = val;
        } else if (key == "verify.poly_degree") {
            cfg.poly_degree = parse_unsigned(val, lineno);
        } else if (key == "verify.filtration_degree") {
            cfg.filtration_degree = parse_unsigned(val, lineno);
        } else if (key == "verify.samples") {
            cfg.samples = parse_unsigned(val, lineno);
        } else if (key == "seed") {
            cfg.seed = std::stoull(val);
        } else if (key == "level.n") {
            cfg.level_n = parse_unsigned(val, lineno);
        } else if (key == "level.m") {
            cfg.level_m = parse_unsigned(val, lineno);
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

Run build_run(const RunConfig& cfg) {
    Group g;
    if (cfg.family == "cyclic") {
        if (cfg.group_m == 0) throw ConfigError("cyclic family needs group.m");
        g = Group::cyclic(cfg.group_m);
    } else if (cfg.family == "symmetric") {
        if (cfg.rank < 2) throw ConfigError("symmetric family needs group.rank >= 2");
        g = Group::symmetric(cfg.rank);
    } else if (cfg.family == "dihedral") {
        if (cfg.group_m == 0) throw ConfigError("dihedral family needs group.m");
        g = Group::dihedral(cfg.group_m);
    } else if (cfg.family == "hyperoctahedral") {
        if (cfg.rank < 1) throw ConfigError("hyperoctahedral family needs group.rank >= 1");
        g = Group::hyperoctahedral(cfg.rank);
    } else {
        throw ConfigError("unknown family '" + cfg.family + "'");
    }

    Run run{cfg, PadicSpec{}, Setting::build(std::move(g)), DunklParams{}};
    run.spec.field = Field::cyclotomic(cfg.cyclotomic_order);
    run.spec.p = cfg.prime;
    run.spec.precision = cfg.precision;
    run.spec.validate();

    run.params.t = Scalar(cfg.t);
    run.params.c.by_class.assign(run.setting.classes.size(), Scalar(0));
    for (const auto& [k, v] : cfg.c) {
        if (k >= run.setting.classes.size())
            throw ConfigError("params.c." + std::to_string(k) + " refers to a class that "
                              "does not exist (group has " +
                              std::to_string(run.setting.classes.size()) + " classes)");
        run.params.c.by_class[k] = Scalar(v);
    }
    unsigned r = run.setting.rank();
    run.params.twist = TwistData::untwisted(r, run.params.t);
    for (const auto& [ij, v] : cfg.omega) {
        auto [i, j] = ij;
        if (j > r) throw ConfigError("params.omega index exceeds the rank");
        MultiPoly f(r);
        if (v.rfind("x_", 0) == 0) {
            unsigned k = parse_unsigned(v.substr(2), 0);
            if (k == 0 || k > r) throw ConfigError("omega variable index exceeds the rank");
            f = MultiPoly::variable(r, k - 1);
        } else {
            f = MultiPoly::constant(r, Scalar(parse_rational(v, 0)));
        }
        run.params.twist.omega[i - 1][j - 1] = f;
        run.params.twist.omega[j - 1][i - 1] = -f;
    }
    return run;
}

} // namespace cherednik
