#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <httplib.h>

#include "mkpow/tables.hpp"

namespace mkpow {

// Endpoint template for b-files; {id} is the A-number, {bfile} the file name.
inline constexpr const char* kDefaultOeisEndpoint = "https://oeis.org/{id}/{bfile}";
inline constexpr const char* kOeisEndpointEnvVar = "MKPOW_OEIS_ENDPOINT";

struct fetch_error : std::runtime_error {
    enum class Kind { timeout, network, malformed };
    Kind kind;
    fetch_error(Kind kind_, const std::string& what) : std::runtime_error(what), kind(kind_) {}
};

namespace detail {

inline std::string bfile_name(const std::string& id) {
    if (id.size() < 2 || id[0] != 'A')
        throw std::invalid_argument("sequence id must look like A370252, got \"" + id + "\"");
    return "b" + id.substr(1) + ".txt";
}

inline std::string substitute(std::string tmpl, const std::string& key, const std::string& value) {
    std::size_t pos;
    while ((pos = tmpl.find(key)) != std::string::npos) tmpl.replace(pos, key.size(), value);
    return tmpl;
}

}  // namespace detail

// Download (or reuse the cached copy of) a b-file.  The cache is checked
// first, so a file is never re-downloaded within a run or across runs.
inline BFile fetch_bfile(const std::string& id, const std::string& cache_dir,
                         std::string endpoint = "") {
    std::string name = detail::bfile_name(id);
    std::filesystem::path cache_path = std::filesystem::path(cache_dir) / name;
    if (std::filesystem::exists(cache_path)) return load_bfile(id, cache_path.string());

    if (endpoint.empty()) {
        const char* env = std::getenv(kOeisEndpointEnvVar);
        endpoint = env ? env : kDefaultOeisEndpoint;
    }
    std::string url = detail::substitute(detail::substitute(endpoint, "{id}", id), "{bfile}", name);

    std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw std::invalid_argument("endpoint is not a URL: " + url);
    std::size_t path_start = url.find('/', scheme_end + 3);
    std::string base = path_start == std::string::npos ? url : url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(base);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    httplib::Result result = client.Get(path);
    if (!result) {
        bool timed_out = result.error() == httplib::Error::ConnectionTimeout ||
                         result.error() == httplib::Error::Read;
        throw fetch_error(timed_out ? fetch_error::Kind::timeout : fetch_error::Kind::network,
                          "fetch of " + url + " failed: " + httplib::to_string(result.error()));
    }
    if (result->status != 200)
        throw fetch_error(fetch_error::Kind::malformed,
                          "fetch of " + url + " returned status " + std::to_string(result->status));

    std::istringstream body(result->body);
    BFile parsed;
    try {
        parsed = parse_bfile(id, body);
    } catch (const std::invalid_argument& e) {
        throw fetch_error(fetch_error::Kind::malformed, e.what());
    }
    std::filesystem::create_directories(cache_path.parent_path());
    std::ofstream out(cache_path);
    out << result->body;
    return parsed;
}

}  // namespace mkpow
