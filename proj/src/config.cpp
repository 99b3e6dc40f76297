#include "afrelay/config.hpp"
#include "afrelay/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace afrelay {

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

double parse_number(const std::string& field, const std::string& value)
{
    // Presets use exact fractions (e.g. 1/3) where the captions do.
    const std::size_t slash = value.find('/');
    if (slash != std::string::npos) {
        const double num = parse_number(field, trim(value.substr(0, slash)));
        const double den =
            parse_number(field, trim(value.substr(slash + 1)));
        if (den == 0.0)
            throw config_error(field + ": division by zero in '" + value +
                               "'");
        return num / den;
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(v))
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error(field + ": expected a number, got '" + value +
                           "'");
    }
}

std::int64_t parse_int(const std::string& field, const std::string& value)
{
    const double v = parse_number(field, value);
    const double r = std::round(v);
    if (std::fabs(v - r) > 1e-9)
        throw config_error(field + ": expected an integer, got '" + value +
                           "'");
    return static_cast<std::int64_t>(r);
}

struct KeyValue {
    std::string value;
    bool used = false;
};

using Section = std::map<std::string, KeyValue>;

struct Document {
    Section link, sweep, mc, expansion, output;
    std::vector<Section> hops;
};

Document tokenize(const std::string& text)
{
    Document doc;
    Section* current = nullptr;
    std::string current_name;
    std::stringstream ss(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(ss, raw)) {
        ++line_no;
        const std::size_t hash = raw.find_first_of("#;");
        std::string line = trim(hash == std::string::npos
                                    ? raw
                                    : raw.substr(0, hash));
        if (line.empty())
            continue;
        const std::string where = "line " + std::to_string(line_no);
        if (line.front() == '[') {
            if (line == "[[hop]]") {
                doc.hops.emplace_back();
                current = &doc.hops.back();
                current_name =
                    "hop[" + std::to_string(doc.hops.size()) + "]";
                continue;
            }
            if (line.size() < 3 || line.back() != ']')
                throw config_error(where + ": malformed section header '" +
                                   line + "'");
            const std::string name = lower(trim(line.substr(1, line.size() - 2)));
            if (name == "link")
                current = &doc.link;
            else if (name == "sweep")
                current = &doc.sweep;
            else if (name == "mc")
                current = &doc.mc;
            else if (name == "expansion")
                current = &doc.expansion;
            else if (name == "output")
                current = &doc.output;
            else
                throw config_error(where + ": unknown section [" + name +
                                   "]");
            current_name = name;
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(where + ": expected 'key = value', got '" +
                               line + "'");
        if (current == nullptr)
            throw config_error(where + ": key outside any section");
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error(where + ": empty key or value");
        if (current->count(key))
            throw config_error(current_name + "." + key +
                               ": duplicate key");
        (*current)[key] = KeyValue{value};
    }
    return doc;
}

std::optional<std::string> take(Section& section, const std::string& key)
{
    auto it = section.find(key);
    if (it == section.end())
        return std::nullopt;
    it->second.used = true;
    return it->second.value;
}

void reject_unused(const Section& section, const std::string& name)
{
    for (const auto& [key, kv] : section)
        if (!kv.used)
            throw config_error(name + "." + key + ": unknown key");
}

FadingModel parse_fading(Section& hop, const std::string& path)
{
    const auto family = take(hop, "family");
    if (!family)
        throw config_error(path + ".family: missing");
    const std::string fam = lower(*family);

    auto num = [&](const char* key,
                   std::optional<double> fallback =
                       std::nullopt) -> double {
        const std::string field = path + "." + key;
        if (auto v = take(hop, key))
            return parse_number(field, *v);
        if (fallback)
            return *fallback;
        throw config_error(field + ": missing");
    };

    FadingModel model;
    if (fam == "nakagami")
        model = Nakagami{num("m"), num("theta", 1.0)};
    else if (fam == "weibull")
        model = Weibull{num("m"), num("theta", 1.0)};
    else if (fam == "rician")
        model = Rician{num("k"), num("theta", 1.0)};
    else if (fam == "hoyt")
        model = Hoyt{num("q"), num("theta", 1.0)};
    else
        throw config_error(path + ".family: unknown family '" + fam + "'");

    try {
        validate(model);
    } catch (const config_error& e) {
        throw config_error(path + ": " + e.what());
    }
    return model;
}

} // namespace

const char* engine_column(Method method)
{
    switch (method) {
    case Method::contour: return "contour";
    case Method::residue_series: return "residue";
    case Method::asymptotic_full: return "asymptotic_full";
    case Method::asymptotic_leading: return "asymptotic_leading";
    case Method::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

Method parse_engine(const std::string& name)
{
    const std::string n = lower(trim(name));
    if (n == "contour")
        return Method::contour;
    if (n == "residue" || n == "residue_series")
        return Method::residue_series;
    if (n == "asymptotic_full")
        return Method::asymptotic_full;
    if (n == "asymptotic_leading")
        return Method::asymptotic_leading;
    if (n == "monte_carlo" || n == "mc")
        return Method::monte_carlo;
    throw config_error("engines: unknown engine '" + name + "'");
}

RunConfig parse_config(const std::string& text)
{
    Document doc = tokenize(text);
    RunConfig cfg;

    // [link]
    if (auto v = take(doc.link, "gamma_th"))
        cfg.link.gamma_th = parse_number("link.gamma_th", *v);
    std::string policy = "paper";
    if (auto v = take(doc.link, "gain_policy"))
        policy = lower(*v);
    if (policy == "paper")
        cfg.link.amplification = PaperGain{};
    else if (policy == "asymptotic")
        cfg.link.amplification = AsymptoticGain{};
    else if (policy == "fixed") {
        auto v = take(doc.link, "fixed_gains");
        if (!v)
            throw config_error(
                "link.fixed_gains: required for gain_policy = fixed");
        FixedGains fixed;
        for (const std::string& item : split_list(*v))
            fixed.gains.push_back(parse_number("link.fixed_gains", item));
        cfg.link.amplification = std::move(fixed);
    } else
        throw config_error("link.gain_policy: unknown policy '" + policy +
                           "'");
    reject_unused(doc.link, "link");

    // [[hop]] tables
    if (doc.hops.size() < 2)
        throw config_error("hop: at least two [[hop]] tables required");
    for (std::size_t i = 0; i < doc.hops.size(); ++i) {
        const std::string path = "hop[" + std::to_string(i + 1) + "]";
        Section& hop = doc.hops[i];
        HopSpec spec;
        spec.fading = parse_fading(hop, path);
        spec.rho = 1.0;
        if (auto v = take(hop, "rho"))
            spec.rho = parse_number(path + ".rho", *v);
        if (i == 0 && spec.rho != 1.0) {
            cfg.warnings.push_back(path + ".rho: forced to 1 (hop-1 noise "
                                   "scaling is the normalization reference)");
            spec.rho = 1.0;
        }
        reject_unused(hop, path);
        cfg.link.hops.push_back(std::move(spec));
    }

    // [sweep]
    if (auto v = take(doc.sweep, "start_db"))
        cfg.sweep.start_db = parse_number("sweep.start_db", *v);
    if (auto v = take(doc.sweep, "stop_db"))
        cfg.sweep.stop_db = parse_number("sweep.stop_db", *v);
    if (auto v = take(doc.sweep, "step_db"))
        cfg.sweep.step_db = parse_number("sweep.step_db", *v);
    if (auto v = take(doc.sweep, "engines"))
        for (const std::string& item : split_list(*v))
            cfg.engines.push_back(parse_engine(item));
    reject_unused(doc.sweep, "sweep");
    if (cfg.engines.empty())
        throw config_error("sweep.engines: at least one engine required");
    if (!(cfg.sweep.start_db <= cfg.sweep.stop_db))
        throw config_error("sweep: start_db must be <= stop_db");
    if (!(cfg.sweep.step_db > 0.0))
        throw config_error("sweep.step_db: must be > 0");

    // [mc]
    if (auto v = take(doc.mc, "trials")) {
        cfg.mc.trials = parse_int("mc.trials", *v);
        if (cfg.mc.trials < 1)
            throw config_error("mc.trials: must be >= 1");
    }
    if (auto v = take(doc.mc, "seed"))
        cfg.mc.seed = static_cast<std::uint64_t>(parse_int("mc.seed", *v));
    if (auto v = take(doc.mc, "workers")) {
        cfg.mc.workers = static_cast<int>(parse_int("mc.workers", *v));
        if (cfg.mc.workers < 0)
            throw config_error("mc.workers: must be >= 0");
    }
    reject_unused(doc.mc, "mc");

    // [expansion]
    if (auto v = take(doc.expansion, "orders")) {
        for (const std::string& item : split_list(*v)) {
            const std::int64_t l = parse_int("expansion.orders", item);
            if (l < 1)
                throw config_error("expansion.orders: must be >= 1");
            cfg.expansion.orders.push_back(static_cast<int>(l));
        }
        const std::size_t relays = cfg.link.n_hops() - 1;
        if (cfg.expansion.orders.size() == 1)
            cfg.expansion.orders.assign(relays, cfg.expansion.orders[0]);
        else if (cfg.expansion.orders.size() != relays)
            throw config_error(
                "expansion.orders: need 1 or N - 1 entries");
    }
    if (auto v = take(doc.expansion, "kappa_offset")) {
        cfg.expansion.kappa_offset =
            parse_number("expansion.kappa_offset", *v);
        if (!(cfg.expansion.kappa_offset > 0.0))
            throw config_error("expansion.kappa_offset: must be > 0");
    }
    if (auto v = take(doc.expansion, "truncation_height")) {
        cfg.expansion.quadrature.truncation_height =
            parse_number("expansion.truncation_height", *v);
        if (!(cfg.expansion.quadrature.truncation_height > 0.0))
            throw config_error("expansion.truncation_height: must be > 0");
    }
    if (auto v = take(doc.expansion, "panel_points")) {
        cfg.expansion.quadrature.panel_points = static_cast<int>(
            parse_int("expansion.panel_points", *v));
        if (cfg.expansion.quadrature.panel_points < 2)
            throw config_error("expansion.panel_points: must be >= 2");
    }
    reject_unused(doc.expansion, "expansion");

    // [output]
    if (auto v = take(doc.output, "path"))
        cfg.output_path = *v;
    reject_unused(doc.output, "output");

    try {
        validate(cfg.link);
    } catch (const config_error& e) {
        throw config_error(std::string("link: ") + e.what());
    }
    return cfg;
}

} // namespace afrelay
