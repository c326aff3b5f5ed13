// zonalkit command line front end: exact computations of zonal polynomials,
// zonal/symplectic characters, Stanley-coordinate polynomials, free cumulants
// and Kerov polynomials, with an optional on-disk result cache.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zonalkit/zonalkit.hpp"

namespace fs = std::filesystem;
using namespace zonalkit;

namespace {

// ---------------------------------------------------------------------------
// Result cache: one JSON file per key hash, written atomically. A hit must be
// byte-identical to recomputation, which holds because every computation here
// is deterministic.
// ---------------------------------------------------------------------------

struct CacheConfig {
    std::string dir; // empty = caching off
    bool bypass = false;
};

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<std::string> cache_read(const CacheConfig& cfg, const std::string& key) {
    if (cfg.dir.empty() || cfg.bypass) return std::nullopt;
    fs::path file = fs::path(cfg.dir) / (fnv1a_hex(key) + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        if (j.at("key").get<std::string>() != key) return std::nullopt; // hash collision
        return j.at("payload").get<std::string>();
    } catch (const std::exception&) {
        return std::nullopt; // unreadable entries are treated as misses
    }
}

void cache_write(const CacheConfig& cfg, const std::string& key, const std::string& payload) {
    if (cfg.dir.empty() || cfg.bypass) return;
    std::error_code ec;
    fs::create_directories(cfg.dir, ec);
    if (ec) return; // cache is best effort
    char stamp[32];
    std::time_t now = std::time(nullptr);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    json j{{"key", key}, {"version", kVersion}, {"created_at", stamp}, {"payload", payload}};
    fs::path file = fs::path(cfg.dir) / (fnv1a_hex(key) + ".json");
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump() << "\n";
    }
    fs::rename(tmp, file, ec);
}

// ---------------------------------------------------------------------------
// Shared option plumbing
// ---------------------------------------------------------------------------

Rational parse_alpha(const std::string& s) {
    Rational a = rational_from_string(s);
    if (a != 2 && a != Rational(1, 2))
        throw validation_error("alpha must be 2 or 1/2, got '" + s + "'");
    return a;
}

// Character by the requested route; alpha = 1/2 goes through conjugation.
Rational character_value(const Partition& mu, const Partition& lambda, const Rational& alpha,
                         const std::string& method) {
    Partition target = alpha == 2 ? lambda : lambda.conjugate();
    Rational zonal;
    if (method == "direct")
        zonal = Rational(zonal_character(mu, target));
    else if (method == "oracle")
        zonal = zonal_character_oracle(mu, target);
    else if (method == "orbit")
        zonal = Rational(zonal_character_orbit_formula(mu, target));
    else
        throw validation_error("unknown method '" + method + "'");
    if (alpha == 2) return zonal;
    return zonal * pow_rational(Rational(-1, 2), mu.weight() - mu.length());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zonal polynomial / zonal character / Kerov polynomial toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    int threads = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "result cache directory (env: ZONALKIT_CACHE)");
    app.add_flag("--no-cache", no_cache, "recompute even if a cache directory is set");
    app.add_option("--threads", threads, "worker threads for the pairing sums")
        ->check(CLI::PositiveNumber);

    std::string lambda_str, mu_str, s0_str;
    std::string alpha_str = "2";
    std::string method = "direct";
    std::string kerov_method = "count";
    bool use_oracle = false;
    int rectangles = 2;
    int upto = 4;
    std::string cumulant_alpha = "1";
    std::string level = "quick";

    auto* cmd_zonal = app.add_subcommand("zonal", "zonal polynomial in the power-sum basis");
    cmd_zonal->add_option("--lambda", lambda_str, "partition, e.g. 2,1")->required();
    cmd_zonal->add_flag("--oracle", use_oracle, "use the orthogonality construction instead");

    auto* cmd_char = app.add_subcommand("character", "normalized character value");
    cmd_char->add_option("--mu", mu_str, "cycle type")->required();
    cmd_char->add_option("--lambda", lambda_str, "diagram")->required();
    cmd_char->add_option("--alpha", alpha_str, "2 or 1/2")->capture_default_str();
    cmd_char->add_option("--method", method, "direct | oracle | orbit")->capture_default_str();

    auto* cmd_stanley = app.add_subcommand("stanley", "character as a polynomial in p, q");
    cmd_stanley->add_option("--mu", mu_str, "cycle type")->required();
    cmd_stanley->add_option("--rectangles", rectangles, "number of rectangle variables")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* cmd_cumulants = app.add_subcommand("cumulants", "free cumulants of a diagram");
    cmd_cumulants->add_option("--lambda", lambda_str, "partition")->required();
    cmd_cumulants->add_option("--upto", upto, "highest cumulant order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_cumulants->add_option("--alpha", cumulant_alpha, "anisotropy, any positive rational")
        ->capture_default_str();

    auto* cmd_kerov = app.add_subcommand("kerov", "character in terms of free cumulants");
    cmd_kerov->add_option("--mu", mu_str, "cycle type")->required();
    cmd_kerov->add_option("--alpha", alpha_str, "2 or 1/2")->capture_default_str();
    cmd_kerov->add_option("--method", kerov_method, "count | oracle")->capture_default_str();

    auto* cmd_selftest = app.add_subcommand("selftest", "run the built-in verification suite");
    cmd_selftest->add_option("--level", level, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();

    auto* cmd_map = app.add_subcommand("map-stats", "surface statistics of a polygon gluing");
    cmd_map->add_option("--mu", mu_str, "polygon half-lengths")->required();
    cmd_map->add_option("--s0", s0_str, "gluing as JSON pairs, e.g. [[1,3],[2,4]]")->required();

    for (auto* sub : {cmd_zonal, cmd_char, cmd_stanley, cmd_cumulants, cmd_kerov, cmd_selftest,
                      cmd_map})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    global_thread_count() = threads;

    CacheConfig cache;
    cache.bypass = no_cache;
    if (!cache_dir.empty())
        cache.dir = cache_dir;
    else if (const char* env = std::getenv("ZONALKIT_CACHE"))
        cache.dir = env;

    const bool as_json = format == "json";

    try {
        if (cmd_selftest->parsed()) { // never cached
            bool ok = run_selftest(level == "full" ? SelftestLevel::full : SelftestLevel::quick,
                                   std::cout);
            return ok ? 0 : 3;
        }

        std::string key;
        std::function<std::string()> compute;

        if (cmd_zonal->parsed()) {
            Partition lambda = Partition::parse(lambda_str);
            key = "zonal|lambda=" + lambda.to_string() + "|oracle=" +
                  (use_oracle ? "1" : "0") + "|format=" + format + "|v=" + kVersion;
            compute = [=]() {
                PSymmetricFunction z =
                    use_oracle ? jack_alpha2_oracle(lambda) : zonal_polynomial(lambda);
                if (!as_json) return z.to_string() + "\n";
                json j{{"lambda", lambda.parts()},
                       {"oracle", use_oracle},
                       {"function", to_json(z)}};
                return j.dump() + "\n";
            };
        } else if (cmd_char->parsed()) {
            Partition mu = Partition::parse(mu_str);
            Partition lambda = Partition::parse(lambda_str);
            Rational alpha = parse_alpha(alpha_str);
            key = "character|mu=" + mu.to_string() + "|lambda=" + lambda.to_string() +
                  "|alpha=" + to_string(alpha) + "|method=" + method + "|format=" + format +
                  "|v=" + kVersion;
            compute = [=]() {
                Rational value = character_value(mu, lambda, alpha, method);
                if (!as_json) return to_string(value) + "\n";
                json j{{"mu", mu.parts()},
                       {"lambda", lambda.parts()},
                       {"alpha", to_string(alpha)},
                       {"method", method},
                       {"value", to_string(value)}};
                return j.dump() + "\n";
            };
        } else if (cmd_stanley->parsed()) {
            Partition mu = Partition::parse(mu_str);
            key = "stanley|mu=" + mu.to_string() + "|m=" + std::to_string(rectangles) +
                  "|format=" + format + "|v=" + kVersion;
            compute = [=]() {
                PQPolynomial f = stanley_polynomial(mu, rectangles);
                if (!as_json) return f.to_string() + "\n";
                json j{{"mu", mu.parts()},
                       {"rectangles", rectangles},
                       {"polynomial", to_json(f)}};
                return j.dump() + "\n";
            };
        } else if (cmd_cumulants->parsed()) {
            Partition lambda = Partition::parse(lambda_str);
            Rational alpha = rational_from_string(cumulant_alpha);
            if (alpha <= 0) throw validation_error("alpha must be positive");
            key = "cumulants|lambda=" + lambda.to_string() + "|upto=" + std::to_string(upto) +
                  "|alpha=" + to_string(alpha) + "|format=" + format + "|v=" + kVersion;
            compute = [=]() {
                auto r = anisotropic_cumulants(MultiRect::of_partition(lambda), alpha, upto);
                if (!as_json) {
                    std::string out;
                    for (int k = 1; k <= upto; ++k)
                        out += "R" + std::to_string(k) + " = " + to_string(r[k]) + "\n";
                    return out;
                }
                json values = json::array();
                for (int k = 1; k <= upto; ++k)
                    values.push_back({{"k", k}, {"value", to_string(r[k])}});
                json j{{"lambda", lambda.parts()},
                       {"alpha", to_string(alpha)},
                       {"cumulants", values}};
                return j.dump() + "\n";
            };
        } else if (cmd_kerov->parsed()) {
            Partition mu = Partition::parse(mu_str);
            Rational alpha = parse_alpha(alpha_str);
            if (kerov_method != "count" && kerov_method != "oracle")
                throw validation_error("unknown method '" + kerov_method + "'");
            key = "kerov|mu=" + mu.to_string() + "|alpha=" + to_string(alpha) +
                  "|method=" + kerov_method + "|format=" + format + "|v=" + kVersion;
            compute = [=]() {
                KerovPolynomial k;
                if (kerov_method == "count") {
                    k = alpha == 2 ? kerov_polynomial_combinatorial(mu) : symplectic_kerov(mu);
                } else {
                    if (mu.length() != 1)
                        throw validation_error("the oracle handles one-part mu only");
                    k = kerov_oracle(mu.part(1));
                    if (alpha != 2) k = symplectic_from_zonal_kerov(k, mu);
                }
                if (!as_json) return k.to_string() + "\n";
                json j = to_json(k);
                j["mu"] = mu.parts();
                j["alpha"] = to_string(alpha);
                j["method"] = kerov_method;
                return j.dump() + "\n";
            };
        } else if (cmd_map->parsed()) {
            Partition mu = Partition::parse(mu_str);
            PairPartition s0 = pair_partition_from_json(json::parse(s0_str, nullptr, true));
            key = "map-stats|mu=" + mu.to_string() + "|s0=" + to_json(s0).dump() +
                  "|format=" + format + "|v=" + kVersion;
            compute = [=]() {
                MapStatistics st = map_statistics(mu, s0);
                if (!as_json) {
                    std::ostringstream out;
                    out << "black=" << st.black_vertices << " white=" << st.white_vertices
                        << " edges=" << st.edges << " faces=" << st.faces
                        << " euler_characteristic=" << st.euler_characteristic
                        << " connected=" << (st.connected ? "yes" : "no")
                        << " orientable=" << (st.orientable ? "yes" : "no") << "\n";
                    return out.str();
                }
                json j = to_json(st);
                j["mu"] = mu.parts();
                j["s0"] = to_json(s0);
                return j.dump() + "\n";
            };
        }

        if (auto hit = cache_read(cache, key)) {
            std::cout << *hit;
            return 0;
        }
        std::string payload = compute();
        cache_write(cache, key, payload);
        std::cout << payload;
        return 0;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
