#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gfq/fock.hpp"
#include "gfq/sparse.hpp"

namespace gfq {

// On-disk store for sector bases, operator matrices and reports. Entries are
// line-oriented text, self-describing: a header carrying the schema version,
// the conventions version and the full key, then the payload. A load whose
// header does not match the request (or whose payload is malformed) warns on
// stderr and reports a miss; stale data is never silently used.
struct Cache {
    std::filesystem::path dir;  // empty disables every operation

    // entry identity; `name` distinguishes operators/reports under one sector
    struct Key {
        int m = 0, n = 0, spins = 1, N = 0;
        std::string name;
    };

    bool enabled() const { return !dir.empty(); }
    std::filesystem::path path_for(const std::string& kind, const Key& key) const;

    // ordered state list of one sector; occupation vectors in global mode order
    bool store_sector(const Key& key, const std::vector<FockState>& states) const;
    std::optional<std::vector<FockState>> load_sector(const Key& key,
                                                      int mode_count) const;

    // header (key, parity, shape), then sorted (row, col, num, den) rows
    bool store_operator(const Key& key, const SparseOperator& op) const;
    std::optional<SparseOperator> load_operator(const Key& key, const BasisPtr& dom,
                                                const BasisPtr& cod) const;

    bool store_report(const Key& key, const std::string& json_text) const;
    std::optional<std::string> load_report(const Key& key) const;
};

}  // namespace gfq
