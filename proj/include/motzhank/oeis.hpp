#pragma once

#include "motzhank/report.hpp"
#include "motzhank/zpoly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motzhank {

/// Terms of an OEIS b-file, contiguous from offset.
struct BFile {
    std::string id;
    long offset = 0;
    std::vector<Integer> terms;

    friend bool operator==(const BFile&, const BFile&) = default;
};

/// True for "A" followed by six digits.
bool valid_oeis_id(std::string_view id);

/// Parses "n a(n)" lines, skipping blank and '#' lines. Throws ParseError on a
/// malformed or non-contiguous line.
BFile parse_bfile(const std::string& id, std::string_view text);

struct OeisConfig {
    std::string base_url = "https://oeis.org";
    std::string cache_dir;
    std::string fixture_dir;
    bool offline = false;

    /// Reads OEIS_BASE_URL and OEIS_CACHE_DIR; the cache defaults to ".oeis-cache".
    static OeisConfig from_env();
};

class OeisClient {
public:
    explicit OeisClient(OeisConfig cfg);

    /// Cached copy if present; otherwise the bundled fixture (offline) or a
    /// download stored atomically in the cache. Throws UnknownSequence,
    /// NetworkUnavailable or ParseError.
    BFile fetch(const std::string& id) const;

    const OeisConfig& config() const { return cfg_; }

private:
    std::string cache_path(const std::string& id) const;
    std::string download(const std::string& id) const;

    OeisConfig cfg_;
};

struct CrossCheck {
    std::size_t compared = 0;
    std::optional<std::size_t> first_mismatch;  ///< index into computed

    bool matched() const { return !first_mismatch; }
};

/// Compares computed[i] with the b-file term of index offset + shift + i.
/// Throws NoOverlap if no index is shared.
CrossCheck cross_check(const std::vector<Integer>& computed, const BFile& bfile, long shift);

/// Triangle rows 0..rows of the named specialization, flattened row by row.
std::vector<Integer> flattened_triangle(int rows, long t, std::optional<long> s);

/// The eight sequences and triangles named alongside the Motzkin table,
/// each checked over `rows` rows or terms.
std::vector<VerificationReport> oeis_cross_checks(const OeisClient& client, int rows);

} // namespace motzhank
