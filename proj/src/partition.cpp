#include "ddhooks/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ddhooks/error.hpp"

namespace ddhooks {

namespace {
void require_positive_t(int t) {
    if (t < 1) throw InvalidArgument("t must be positive", std::to_string(t));
}
}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InvalidPartition("parts must be positive", to_string(*this));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidPartition("parts must be weakly decreasing", to_string(*this));
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

StrictPartition::StrictPartition(std::vector<int> parts) : p_(std::move(parts)) {
    const auto& v = p_.parts();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) throw InvalidPartition("parts must be distinct", to_string(p_));
}

bool StrictPartition::contains(int part) const noexcept {
    const auto& v = p_.parts();
    return std::find(v.begin(), v.end(), part) != v.end();
}

PartitionClass PartitionClass::t_core(int t) {
    if (t < 1) throw InvalidArgument("t must be positive");
    return {ClassKind::TCore, t};
}

PartitionClass PartitionClass::dd_t_core(int t) {
    if (t < 1) throw InvalidArgument("t must be positive");
    return {ClassKind::DDTCore, t};
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.parts()[i];
    os << ')';
    return os.str();
}

std::string to_string(const PartitionClass& c) {
    switch (c.kind) {
        case ClassKind::All: return "all";
        case ClassKind::Strict: return "strict";
        case ClassKind::DoubledDistinct: return "dd";
        case ClassKind::SelfConjugate: return "sc";
        case ClassKind::TCore: return "tcore:" + std::to_string(c.t);
        case ClassKind::DDTCore: return "ddtcore:" + std::to_string(c.t);
    }
    return "?";
}

PartitionClass parse_partition_class(const std::string& text) {
    if (text == "all") return PartitionClass::all();
    if (text == "strict") return PartitionClass::strict();
    if (text == "dd") return PartitionClass::doubled_distinct();
    if (text == "sc") return PartitionClass::self_conjugate();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon);
        int t = 0;
        try {
            t = std::stoi(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw InvalidArgument("bad class parameter", text);
        }
        if (head == "tcore") return PartitionClass::t_core(t);
        if (head == "ddtcore") return PartitionClass::dd_t_core(t);
    }
    throw InvalidArgument("unknown partition class", text);
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> c(static_cast<std::size_t>(p.row(0)), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

HookMatrix hook_lengths(const Partition& p) {
    const Partition c = conjugate(p);
    HookMatrix h(p.length());
    for (std::size_t i = 0; i < p.length(); ++i) {
        const int li = p.row(i);
        h[i].resize(static_cast<std::size_t>(li));
        for (int j = 0; j < li; ++j)
            h[i][static_cast<std::size_t>(j)] =
                li + c.row(static_cast<std::size_t>(j)) - static_cast<int>(i) - j - 1;
    }
    return h;
}

int count_t_hooks(const Partition& p, int t) {
    require_positive_t(t);
    int count = 0;
    for (const auto& row : hook_lengths(p)) count += static_cast<int>(std::count(row.begin(), row.end(), t));
    return count;
}

int count_t_hooks_above_diagonal(const Partition& p, int t) {
    require_positive_t(t);
    int count = 0;
    const HookMatrix h = hook_lengths(p);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h[i].size(); ++j)
            if (h[i][j] == t) ++count;
    return count;
}

int count_distinct_parts(const Partition& p) {
    const auto& v = p.parts();
    int n = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i == 0 || v[i] != v[i - 1]) ++n;
    return n;
}

// The doubled partition has Frobenius symbol (s_1..s_l | s_1-1..s_l-1): rows
// i <= l are s_i + i and row r > l counts the columns i <= l of length >= r.
Partition double_distinct(const StrictPartition& s) {
    const int l = static_cast<int>(s.length());
    std::vector<int> rows;
    for (int i = 1; i <= l; ++i) rows.push_back(s.row(static_cast<std::size_t>(i - 1)) + i);
    for (int r = l + 1;; ++r) {
        int len = 0;
        for (int i = 1; i <= l; ++i)
            if (rows[static_cast<std::size_t>(i - 1)] - 1 >= r) ++len;
        if (len == 0) break;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

int durfee_side(const Partition& p) {
    int s = 0;
    while (static_cast<std::size_t>(s) < p.length() && p.row(static_cast<std::size_t>(s)) >= s + 1) ++s;
    return s;
}

bool is_doubled_distinct(const Partition& p) {
    const int l = durfee_side(p);
    const Partition c = conjugate(p);
    auto row = [&](int i) { return p.row(static_cast<std::size_t>(i - 1)); };
    auto col = [&](int i) { return c.row(static_cast<std::size_t>(i - 1)); };
    for (int i = 1; i <= l; ++i)
        if (col(i) != row(i) - 1) return false;
    if (l > 0 && col(l + 1) != l) return false;
    const int width = p.empty() ? 0 : p.row(0);
    for (int i = l + 2; i <= width + 1; ++i)
        if (col(i) != row(i - 1)) return false;
    return true;
}

StrictPartition undouble(const Partition& p) {
    if (!is_doubled_distinct(p)) throw NotDoubledDistinct("conjugate structure fails", to_string(p));
    const int l = durfee_side(p);
    std::vector<int> s;
    for (int i = 1; i <= l; ++i) s.push_back(p.row(static_cast<std::size_t>(i - 1)) - i);
    return StrictPartition(std::move(s));
}

HookMatrix shifted_hook_lengths(const StrictPartition& s) {
    const int l = static_cast<int>(s.length());
    auto part = [&](int i) { return s.row(static_cast<std::size_t>(i - 1)); };
    HookMatrix h(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) {
        // Row i occupies shifted columns i .. i + s_i - 1.
        const int last = i + part(i) - 1;
        for (int j = i; j <= last; ++j) {
            int leg = 0;
            for (int r = i + 1; r <= std::min(j, l); ++r)
                if (r + part(r) - 1 >= j) ++leg;
            const int wrap = (j + 1 <= l) ? part(j + 1) : 0;
            h[static_cast<std::size_t>(i - 1)].push_back((last - j) + leg + 1 + wrap);
        }
    }
    return h;
}

int count_t_shifted_hooks(const StrictPartition& s, int t) {
    require_positive_t(t);
    int count = 0;
    for (const auto& row : shifted_hook_lengths(s)) count += static_cast<int>(std::count(row.begin(), row.end(), t));
    return count;
}

bool is_t_core(const Partition& p, int t) {
    require_positive_t(t);
    for (const auto& row : hook_lengths(p))
        for (int h : row)
            if (h % t == 0) return false;
    return true;
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

bool is_strict(const Partition& p) {
    const auto& v = p.parts();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) return false;
    return true;
}

bool classify(const Partition& p, const PartitionClass& c) {
    switch (c.kind) {
        case ClassKind::All: return true;
        case ClassKind::Strict: return is_strict(p);
        case ClassKind::DoubledDistinct: return is_doubled_distinct(p);
        case ClassKind::SelfConjugate: return is_self_conjugate(p);
        case ClassKind::TCore: return is_t_core(p, c.t);
        case ClassKind::DDTCore: return is_doubled_distinct(p) && is_t_core(p, c.t);
    }
    return false;
}

}  // namespace ddhooks
