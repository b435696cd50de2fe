#include "gfq/cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "gfq/version.hpp"

namespace gfq {

namespace {

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')
                   ? c
                   : '_';
    return out.empty() ? std::string("x") : out;
}

std::string key_line(const Cache::Key& k) {
    std::ostringstream os;
    os << "key m=" << k.m << " n=" << k.n << " spins=" << k.spins << " N=" << k.N
       << " name=" << k.name;
    return os.str();
}

void warn_ignored(const std::filesystem::path& p, const std::string& why) {
    std::cerr << "cache: ignoring " << p.string() << " (" << why << ")\n";
}

// shared header; returns false (after warning) on any mismatch
bool read_header(std::istream& in, const std::filesystem::path& p,
                 const std::string& kind, const Cache::Key& key) {
    std::string line;
    if (!std::getline(in, line) || line != "gfq-cache 1") {
        warn_ignored(p, "unknown schema");
        return false;
    }
    if (!std::getline(in, line) ||
        line != std::string("conventions ") + conventions_version) {
        warn_ignored(p, "conventions version mismatch");
        return false;
    }
    if (!std::getline(in, line) || line != "kind " + kind) {
        warn_ignored(p, "wrong kind");
        return false;
    }
    if (!std::getline(in, line) || line != key_line(key)) {
        warn_ignored(p, "key mismatch");
        return false;
    }
    return true;
}

void write_header(std::ostream& out, const std::string& kind, const Cache::Key& key) {
    out << "gfq-cache 1\n"
        << "conventions " << conventions_version << "\n"
        << "kind " << kind << "\n"
        << key_line(key) << "\n";
}

bool commit(const std::filesystem::path& final_path, const std::string& content) {
    std::error_code ec;
    std::filesystem::create_directories(final_path.parent_path(), ec);
    const std::filesystem::path tmp = final_path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return false;
        out << content;
        if (!out) return false;
    }
    std::filesystem::rename(tmp, final_path, ec);
    return !ec;
}

}  // namespace

std::filesystem::path Cache::path_for(const std::string& kind, const Key& key) const {
    std::ostringstream name;
    name << kind << "-m" << key.m << "-n" << key.n << "-s" << key.spins << "-N"
         << key.N << "-" << sanitize(key.name) << ".cache";
    return dir / name.str();
}

bool Cache::store_sector(const Key& key, const std::vector<FockState>& states) const {
    if (!enabled()) return false;
    std::ostringstream out;
    write_header(out, "sector", key);
    out << "states " << states.size() << "\n";
    for (const auto& st : states) {
        for (size_t i = 0; i < st.occ.size(); ++i)
            out << (i ? " " : "") << st.occ[i];
        out << "\n";
    }
    return commit(path_for("sector", key), out.str());
}

std::optional<std::vector<FockState>> Cache::load_sector(const Key& key,
                                                         int mode_count) const {
    if (!enabled()) return std::nullopt;
    const auto p = path_for("sector", key);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    if (!read_header(in, p, "sector", key)) return std::nullopt;
    std::string tok;
    size_t count = 0;
    if (!(in >> tok >> count) || tok != "states") {
        warn_ignored(p, "malformed payload");
        return std::nullopt;
    }
    std::vector<FockState> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        FockState st;
        st.occ.resize(static_cast<size_t>(mode_count));
        for (int q = 0; q < mode_count; ++q) {
            int v = 0;
            if (!(in >> v) || v < 0) {
                warn_ignored(p, "malformed payload");
                return std::nullopt;
            }
            st.occ[static_cast<size_t>(q)] = static_cast<std::int16_t>(v);
        }
        out.push_back(std::move(st));
    }
    return out;
}

bool Cache::store_operator(const Key& key, const SparseOperator& op) const {
    if (!enabled()) return false;
    std::ostringstream out;
    write_header(out, "operator", key);
    if (op.parity())
        out << "parity " << *op.parity() << "\n";
    else
        out << "parity none\n";
    out << "shape rows " << op.rows() << " cols " << op.cols() << " domN "
        << op.domain()->N << " codN " << op.codomain()->N << "\n";
    const auto triples = op.sorted_triples();
    out << "nnz " << triples.size() << "\n";
    for (const auto& [r, c, v] : triples)
        out << r << " " << c << " " << numerator(v) << " " << denominator(v) << "\n";
    return commit(path_for("operator", key), out.str());
}

std::optional<SparseOperator> Cache::load_operator(const Key& key, const BasisPtr& dom,
                                                   const BasisPtr& cod) const {
    if (!enabled()) return std::nullopt;
    const auto p = path_for("operator", key);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    if (!read_header(in, p, "operator", key)) return std::nullopt;

    std::string tok, par;
    if (!(in >> tok >> par) || tok != "parity") {
        warn_ignored(p, "malformed payload");
        return std::nullopt;
    }
    std::optional<int> parity;
    if (par != "none") parity = std::stoi(par);

    std::string t1, t2, t3, t4;
    long rows = 0, cols = 0, domN = 0, codN = 0;
    if (!(in >> tok >> t1 >> rows >> t2 >> cols >> t3 >> domN >> t4 >> codN) ||
        tok != "shape") {
        warn_ignored(p, "malformed payload");
        return std::nullopt;
    }
    if (rows != cod->dim() || cols != dom->dim() || domN != dom->N || codN != cod->N) {
        warn_ignored(p, "shape mismatch");
        return std::nullopt;
    }
    size_t nnz = 0;
    if (!(in >> tok >> nnz) || tok != "nnz") {
        warn_ignored(p, "malformed payload");
        return std::nullopt;
    }
    SparseOperator op(dom, cod, parity);
    for (size_t i = 0; i < nnz; ++i) {
        long r = 0, c = 0;
        std::string num, den;
        if (!(in >> r >> c >> num >> den) || r < 0 || r >= rows || c < 0 || c >= cols) {
            warn_ignored(p, "malformed payload");
            return std::nullopt;
        }
        Rational v;
        try {
            v = Rational(Integer(num), Integer(den));
        } catch (const std::exception&) {
            warn_ignored(p, "malformed payload");
            return std::nullopt;
        }
        op.add_entry(static_cast<int>(r), static_cast<int>(c), v);
    }
    return op;
}

bool Cache::store_report(const Key& key, const std::string& json_text) const {
    if (!enabled()) return false;
    std::ostringstream out;
    write_header(out, "report", key);
    out << "bytes " << json_text.size() << "\n" << json_text;
    return commit(path_for("report", key), out.str());
}

std::optional<std::string> Cache::load_report(const Key& key) const {
    if (!enabled()) return std::nullopt;
    const auto p = path_for("report", key);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    if (!read_header(in, p, "report", key)) return std::nullopt;
    std::string tok;
    size_t bytes = 0;
    if (!(in >> tok >> bytes) || tok != "bytes") {
        warn_ignored(p, "malformed payload");
        return std::nullopt;
    }
    in.get();  // newline after the byte count
    std::string payload(bytes, '\0');
    in.read(payload.data(), static_cast<std::streamsize>(bytes));
    if (static_cast<size_t>(in.gcount()) != bytes) {
        warn_ignored(p, "truncated payload");
        return std::nullopt;
    }
    return payload;
}

}  // namespace gfq
