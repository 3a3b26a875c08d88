#ifndef QUADCONG_CLI_HPP
#define QUADCONG_CLI_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadcong/congruence.hpp"

namespace quadcong::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

/// One JSON object per record.  Integers that fit in 64 bits are JSON
/// numbers, larger ones decimal strings.
std::string record_to_json(CongruenceRecord const & rec);
std::optional<CongruenceRecord> record_from_json(std::string const & line);

/// Cache line = record JSON plus a checksum of its canonical form.
std::string cache_line(CongruenceRecord const & rec);
std::optional<CongruenceRecord> parse_cache_line(std::string const & line);

struct CacheStats {
    std::size_t hits = 0;
    std::size_t computed = 0;
    std::size_t corrupt = 0;
};

/// Records for `keys`, reading from and completing the cache file when a path
/// is given.  Corrupt lines are dropped and recomputed.
std::vector<CongruenceRecord> cached_records(std::vector<RecordKey> const & keys, unsigned jobs,
                                             std::optional<std::string> const & cache_path,
                                             CacheStats * stats = nullptr);

/// Largest discriminant a scan may touch (QUADCONG_MAX_BOUND, default 10^6).
long max_bound();

/// Entry point shared by the executable and the tests.
int run(std::vector<std::string> args, std::ostream & out, std::ostream & err);

} // namespace quadcong::cli

#endif
