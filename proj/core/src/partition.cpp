#include "symrep/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace symrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition must be of the form [a,b,...]: " + text);
    std::vector<int> parts;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return Partition{};
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int value, mult = 1;
        auto caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                value = std::stoi(tok);
            } else {
                value = std::stoi(tok.substr(0, caret));
                mult = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part '" + tok + "' in " + text);
        }
        if (mult < 0) throw std::invalid_argument("negative multiplicity in " + text);
        for (int k = 0; k < mult; ++k) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("part index must be >= 1");
    return i <= num_parts() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int r = 1; r <= (parts_.empty() ? 0 : parts_[0]); ++r) {
        int count = 0;
        for (int p : parts_)
            if (p >= r) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::vector<DiagramCell> Partition::cells() const {
    std::vector<DiagramCell> out;
    out.reserve(static_cast<size_t>(n_));
    for (int i = 1; i <= num_parts(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j)
            out.push_back({i, j});
    return out;
}

bool Partition::contains_cell(int col, int line) const {
    return col >= 1 && line >= 1 && col <= num_parts() && line <= parts_[col - 1];
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    int m = std::max(a.num_parts(), b.num_parts());
    for (int i = 1; i <= m; ++i)
        if (a.part(i) != b.part(i)) return a.part(i) <=> b.part(i);
    return std::strong_ordering::equal;
}

bool lex_less(const Partition& a, const Partition& b) {
    int m = std::max(a.num_parts(), b.num_parts());
    for (int i = 1; i <= m; ++i)
        if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
    return false;
}

int diagonal_length(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("diagonal_length of empty partition");
    int b = 0;
    while (b + 1 <= p.num_parts() && p.part(b + 1) >= b + 1) ++b;
    return b;
}

bool is_hook(const Partition& p) {
    return !p.empty() && diagonal_length(p) == 1;
}

PartitionClass classify(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("classify of empty partition");
    if (is_hook(p)) return {ShapeClass::Hook};
    Partition q = p.conjugate();
    if (p == q) return {ShapeClass::ProperSym};
    return {ShapeClass::ProperAsym, lex_less(p, q)};
}

std::vector<int> descents(const Partition& p) {
    std::vector<int> out;
    for (int r = 1; r <= p.num_parts(); ++r)
        if (p.part(r) > p.part(r + 1)) out.push_back(r);
    return out;
}

Partition remove_at(const Partition& p, int r) {
    auto d = descents(p);
    if (std::find(d.begin(), d.end(), r) == d.end())
        throw std::invalid_argument("index " + std::to_string(r) + " is not a descent of " + p.to_string());
    std::vector<int> parts = p.parts();
    if (--parts[r - 1] == 0) parts.erase(parts.begin() + (r - 1));
    return Partition(std::move(parts));
}

std::vector<Partition> predecessors(const Partition& p) {
    std::vector<Partition> out;
    for (int r : descents(p)) out.push_back(remove_at(p, r));
    return out;
}

Partition diagram_union(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    int m = std::max(a.num_parts(), b.num_parts());
    for (int i = 1; i <= m; ++i) parts.push_back(std::max(a.part(i), b.part(i)));
    return Partition(std::move(parts));
}

Partition diagram_intersection(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    int m = std::min(a.num_parts(), b.num_parts());
    for (int i = 1; i <= m; ++i) {
        int v = std::min(a.part(i), b.part(i));
        if (v == 0) break;
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

mpz_class dimension(const Partition& p) {
    if (p.empty()) return 1;
    int r = p.num_parts();
    // l_i = lambda_i + r - i; dim = n! * prod_{i<j}(l_i - l_j) / prod l_i!
    std::vector<long> l(r);
    for (int i = 1; i <= r; ++i) l[i - 1] = p.part(i) + r - i;
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(p.n()));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) num *= l[i] - l[j];
    mpz_class den = 1, f;
    for (int i = 0; i < r; ++i) {
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(l[i]));
        den *= f;
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

mpz_class dimension_young(const Partition& p) {
    static std::map<Partition, mpz_class> cache;
    static std::mutex mtx;
    if (p.n() <= 1) return 1;
    {
        std::lock_guard lock(mtx);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    mpz_class sum = 0;
    for (const auto& mu : predecessors(p)) sum += dimension_young(mu);
    std::lock_guard lock(mtx);
    cache.emplace(p, sum);
    return sum;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Partition dab(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("dab needs a, b >= 0");
    std::vector<int> parts{a + 2, 2};
    for (int k = 0; k < b; ++k) parts.push_back(1);
    return Partition(std::move(parts));
}

mpz_class dim_dab(int a, int b) {
    int n = a + b + 4;
    // (b+1)/(a+2) * C(n-2, a) * n
    mpz_class num = mpz_class(b + 1) * binomial(n - 2, a) * n;
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(a + 2));
    return q;
}

long shift_count(const Partition& p) {
    auto cs = p.cells();
    long count = 0;
    for (size_t a = 0; a < cs.size(); ++a)
        for (size_t b = 0; b < cs.size(); ++b)
            if (cs[a].col < cs[b].col && cs[a].line > cs[b].line) ++count;
    return count;
}

int form_sign(const Partition& p) {
    if (!p.is_self_conjugate())
        throw std::invalid_argument("form_sign requires a self-conjugate partition");
    return shift_count(p) % 2 == 0 ? 1 : -1;
}

mpq_class xi(const Partition& p) {
    auto cs = p.cells();
    mpq_class out = 1;
    for (const auto& c1 : cs)
        for (const auto& c2 : cs)
            if (c1.col < c2.col && c1.line > c2.line) {
                long d = (c2.col - c1.col) + (c1.line - c2.line);
                mpq_class factor(d - 1, d + 1);
                factor.canonicalize();
                out *= factor;
            }
    return out;
}

mpz_class gamma(const Partition& p) {
    int n = p.n();
    if (n < 2) throw std::invalid_argument("gamma needs |lambda| >= 2");
    // Content sum, oriented so that gamma([n]) = +1.
    long content = 0;
    for (const auto& c : p.cells()) content += c.line - c.col;
    mpz_class num = dimension(p) * content * 2;
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(),
                    static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1));
    return q;
}

int eta(const Partition& p) {
    mpz_class d = dimension(p), g = gamma(p);
    mpz_class diff = d - g;
    if (diff % 2 != 0)
        throw std::logic_error("dim and gamma parity mismatch on " + p.to_string());
    mpz_class half = diff / 2;
    return mpz_even_p(half.get_mpz_t()) ? 1 : -1;
}

namespace {
void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, acc, out);
    return out;
}

std::vector<Partition> en_representatives(int n) {
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n)) {
        auto c = classify(p);
        if (c.tag == ShapeClass::ProperAsym && c.is_lex_representative) out.push_back(p);
    }
    return out;
}

std::vector<Partition> fn_set(int n) {
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n))
        if (classify(p).tag == ShapeClass::ProperSym) out.push_back(p);
    return out;
}

mpz_class osp_dim(const Partition& p) {
    mpz_class N = dimension(p);
    return form_sign(p) > 0 ? mpz_class(N * (N - 1) / 2) : mpz_class(N * (N + 1) / 2);
}

mpz_class predicted_theorem_a_dim(int n) {
    if (n < 3) throw std::invalid_argument("predicted_theorem_a_dim needs n >= 3");
    mpz_class total = mpz_class(n - 1) * (n - 1) - 1;
    for (const auto& p : en_representatives(n)) {
        mpz_class d = dimension(p);
        total += d * d - 1;
    }
    for (const auto& p : fn_set(n)) total += osp_dim(p);
    return total;
}

Partition find_self_conjugate(int n) {
    if (n < 3) throw std::invalid_argument("find_self_conjugate needs n >= 3");
    if (n % 2 == 1) {
        // Self-conjugate hook [ (n+1)/2, 1^{(n-1)/2} ].
        std::vector<int> parts{(n + 1) / 2};
        for (int k = 0; k < (n - 1) / 2; ++k) parts.push_back(1);
        return Partition(std::move(parts));
    }
    // Even n: [p,2,1^{p-2}] with p = n/2 is proper and self-conjugate for n >= 4.
    int p = n / 2;
    std::vector<int> parts{p, 2};
    for (int k = 0; k < p - 2; ++k) parts.push_back(1);
    return Partition(std::move(parts));
}

}  // namespace symrep
