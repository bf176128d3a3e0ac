#include "pslab/config.hpp"

#include <charconv>
#include <fstream>

#include "pslab/errors.hpp"

namespace pslab {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value)
{
    T out{};
    const auto* first = value.data();
    const auto* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    require(res.ec == std::errc() && res.ptr == last, "config: bad value for " + key + ": '" + value + "'");
    return out;
}

std::vector<std::int64_t> parse_list(const std::string& key, const std::string& value)
{
    std::vector<std::int64_t> out;
    if (trim(value).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = value.find(',', start);
        out.push_back(parse_number<std::int64_t>(key, trim(value.substr(start, comma - start))));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

int RunConfig::rank() const
{
    if (group == "A1") return 1;
    if (group == "A2") return 2;
    if (group == "A3") return 3;
    throw PreconditionError("config: group must be A1, A2 or A3");
}

void set_key(RunConfig& cfg, const std::string& raw_key, const std::string& raw_value)
{
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key == "group") {
        cfg.group = value;
        cfg.rank();
    } else if (key == "p") {
        cfg.p = parse_number<std::uint32_t>(key, value);
    } else if (key == "a") {
        cfg.a = parse_number<std::uint32_t>(key, value);
    } else if (key == "N") {
        cfg.N = parse_number<int>(key, value);
    } else if (key == "ell") {
        if (value == "auto" || value.empty())
            cfg.ell.reset();
        else
            cfg.ell = parse_number<std::uint32_t>(key, value);
    } else if (key == "theta") {
        cfg.theta = parse_list(key, value);
    } else if (key == "lambda") {
        cfg.lambda = parse_list(key, value);
    } else if (key == "mu") {
        cfg.mu = parse_list(key, value);
    } else if (key == "J") {
        cfg.J = parse_number<std::uint32_t>(key, value);
    } else if (key == "K") {
        cfg.K = parse_number<std::uint32_t>(key, value);
    } else if (key == "k") {
        cfg.k = parse_number<int>(key, value);
    } else if (key == "i") {
        cfg.i = parse_number<int>(key, value);
    } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "threads") {
        cfg.threads = parse_number<int>(key, value);
        require(cfg.threads >= 1, "config: threads must be positive");
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "grid") {
        require(value == "single" || value == "full", "config: grid must be single or full");
        cfg.grid = value;
    } else if (key == "samples") {
        cfg.samples = parse_number<int>(key, value);
        require(cfg.samples >= 0, "config: samples must be non-negative");
    } else {
        throw PreconditionError("config: unknown key '" + key + "'");
    }
}

void load_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), "config: cannot read " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        require(eq != std::string::npos, "config: " + path + ":" + std::to_string(lineno) + ": expected key=value");
        set_key(cfg, t.substr(0, eq), t.substr(eq + 1));
    }
}

void apply_override(RunConfig& cfg, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    require(eq != std::string::npos, "config: override '" + assignment + "' is not key=value");
    set_key(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

nlohmann::json echo(const RunConfig& cfg)
{
    nlohmann::json j;
    j["group"] = cfg.group;
    j["p"] = cfg.p;
    j["a"] = cfg.a;
    j["N"] = cfg.N;
    j["ell"] = cfg.ell ? nlohmann::json(*cfg.ell) : nlohmann::json("auto");
    j["theta"] = cfg.theta;
    j["lambda"] = cfg.lambda;
    j["mu"] = cfg.mu;
    j["J"] = cfg.J ? nlohmann::json(*cfg.J) : nlohmann::json(nullptr);
    j["K"] = cfg.K ? nlohmann::json(*cfg.K) : nlohmann::json(nullptr);
    j["k"] = cfg.k;
    j["i"] = cfg.i;
    j["seed"] = cfg.seed;
    j["grid"] = cfg.grid;
    j["samples"] = cfg.samples;
    return j;
}

Workbench Workbench::build(const RunConfig& cfg)
{
    Workbench wb;
    wb.field = std::make_shared<const FieldTower>(FieldTower::build(cfg.p, cfg.a, cfg.N));
    wb.roots = std::make_shared<const RootSystem>(RootSystem::build_A(cfg.rank()));
    wb.group = std::make_shared<const Chevalley>(wb.field, wb.roots);
    wb.chars = std::make_shared<const CharacterTable>(wb.group, make_coeff_field(*wb.field, cfg.ell));
    return wb;
}

Character Workbench::character(const std::vector<std::int64_t>& exps) const
{
    if (exps.empty()) return chars->trivial();
    return chars->make(exps);
}

} // namespace pslab
