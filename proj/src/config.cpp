#include "symsing/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace symsing {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_uint(const std::string& key, const std::string& value)
{
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parameter '" + key + "' must be a nonnegative integer, got '" + value + "'");
    try {
        return std::stoull(value);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("parameter '" + key + "' is out of range");
    }
}

}  // namespace

unsigned workers_from_env()
{
    const char* v = std::getenv(std::string(kThreadsEnv).c_str());
    if (!v || !*v) return 1;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (*end != '\0' || n == 0) return 1;
    return static_cast<unsigned>(std::min<unsigned long>(n, 256));
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void ExperimentConfig::set(const std::string& key, const std::string& value)
{
    if (key.empty() || key.find_first_of("=# \t\n") != std::string::npos)
        throw std::invalid_argument("invalid config key '" + key + "'");
    if (value.find_first_of("#\n") != std::string::npos)
        throw std::invalid_argument("config value for '" + key + "' contains '#' or a newline");
    if (key == "command") command = value;
    else if (key == "verifier") verifier = value;
    else if (key == "seed") seed = parse_uint(key, value);
    else if (key == "trials") trials = parse_uint(key, value);
    else if (key == "out") out = value;
    else if (key == "format") format = parse_format(value);
    else params[key] = value;
}

std::string ExperimentConfig::serialize() const
{
    std::ostringstream s;
    s << "command = " << command << '\n';
    if (!verifier.empty()) s << "verifier = " << verifier << '\n';
    s << "seed = " << seed << '\n';
    if (trials) s << "trials = " << *trials << '\n';
    s << "format = " << format_tag(format) << '\n';
    if (!out.empty()) s << "out = " << out << '\n';
    for (const auto& [k, v] : params) s << k << " = " << v << '\n';
    return s.str();
}

void ExperimentConfig::merge_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + " is not 'key = value'");
        set(trim(std::string_view(body).substr(0, eq)), trim(std::string_view(body).substr(eq + 1)));
    }
}

ExperimentConfig ExperimentConfig::parse(std::string_view text)
{
    ExperimentConfig c;
    c.merge_text(text);
    return c;
}

std::string ExperimentConfig::hash() const
{
    auto copy = *this;
    copy.out.clear();
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(copy.serialize())));
    return buf;
}

std::uint64_t ExperimentConfig::get_uint(const std::string& key, std::uint64_t fallback) const
{
    auto it = params.find(key);
    return it == params.end() ? fallback : parse_uint(key, it->second);
}

std::uint64_t ExperimentConfig::require_uint(const std::string& key) const
{
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("missing required parameter '" + key + "'");
    return parse_uint(key, it->second);
}

Rational ExperimentConfig::get_rational(const std::string& key, const Rational& fallback) const
{
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        return parse_rational(it->second);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parameter '" + key + "' must be a rational 'num/den', got '" + it->second + "'");
    }
}

std::string ExperimentConfig::get_string(const std::string& key, const std::string& fallback) const
{
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::vector<std::uint64_t> ExperimentConfig::get_uint_list(const std::string& key,
                                                           std::vector<std::uint64_t> fallback) const
{
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::vector<std::uint64_t> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_uint(key, trim(item)));
    if (out.empty()) throw std::invalid_argument("parameter '" + key + "' is an empty list");
    return out;
}

}  // namespace symsing
