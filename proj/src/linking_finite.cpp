#include "wittkit/linking_finite.hpp"

#include "wittkit/errors.hpp"
#include "wittkit/snf.hpp"

#include <algorithm>
#include <set>

namespace wittkit {

namespace {

using i128 = __int128;

long mulmod(long a, long b, long m) { return static_cast<long>(static_cast<i128>(a) * b % m); }
long md(long a, long m)
{
    a %= m;
    return a < 0 ? a + m : a;
}

long ppow(long p, int e)
{
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1L << 58) / p) throw SearchSpaceTooLarge("group exponent too large for machine arithmetic");
        r *= p;
    }
    return r;
}

// Numerator of q modulo m, where q * m must be integral.
long frac_num(const BigRat& q, long m)
{
    BigRat s = q * BigRat(m);
    s.canonicalize();
    if (s.get_den() != 1) throw ParseError("pairing value " + to_string(q) + " not well defined on the group");
    return mod_pos(s.get_num(), BigInt(m)).get_si();
}

long det_mod_p(std::vector<std::vector<long>> a, long p)
{
    size_t n = a.size();
    long det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && md(a[piv][c], p) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = p - det;
        }
        long pv = md(a[c][c], p);
        det = mulmod(det, pv, p);
        long inv = inv_mod(pv, p);
        for (size_t i = c + 1; i < n; ++i) {
            long f = mulmod(md(a[i][c], p), inv, p);
            if (f == 0) continue;
            for (size_t j = c; j < n; ++j) a[i][j] = md(a[i][j] - mulmod(f, md(a[c][j], p), p), p);
        }
    }
    return md(det, p);
}

std::vector<std::vector<long>> aux_block(const std::vector<std::vector<long>>& G, const std::vector<int>& orders,
                                         int L, long p, int level)
{
    std::vector<size_t> idx;
    for (size_t i = 0; i < orders.size(); ++i)
        if (orders[i] == level) idx.push_back(i);
    long shift = ppow(p, L - level);
    std::vector<std::vector<long>> b(idx.size(), std::vector<long>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t c = 0; c < idx.size(); ++c) {
            long g = G[idx[a]][idx[c]];
            if (g % shift != 0) throw InternalError("pairing exceeds the generator order");
            b[a][c] = md(g / shift, p);
        }
    return b;
}

}  // namespace

int FiniteLinkingForm::max_level() const
{
    int m = 0;
    for (int l : orders) m = std::max(m, l);
    return m;
}

BigInt FiniteLinkingForm::group_order() const
{
    BigInt r = 1;
    for (int l : orders) r *= ipow(BigInt(p), static_cast<unsigned>(l));
    return r;
}

std::vector<std::vector<long>> FiniteLinkingForm::numerators() const
{
    long m = ppow(p, max_level());
    size_t n = rank();
    std::vector<std::vector<long>> g(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g[i][j] = frac_num(gram(i, j), m);
    return g;
}

void FiniteLinkingForm::validate() const
{
    if (!is_prime(p)) throw ParseError("modulus " + std::to_string(p) + " is not prime");
    if (epsilon != 1 && epsilon != -1) throw ParseError("epsilon must be +1 or -1");
    size_t n = rank();
    if (gram.rows() != n || gram.cols() != n) throw ParseError("gram size does not match the generator list");
    for (int l : orders)
        if (l < 1) throw ParseError("generator exponents must be positive");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            long oi = ppow(p, orders[i]), oj = ppow(p, orders[j]);
            BigRat v = gram(i, j);
            if (!is_integer(v * BigRat(oi)) || !is_integer(v * BigRat(oj)))
                throw ParseError("pairing is not well defined on generator orders");
            if (!is_integer(v - BigRat(epsilon) * gram(j, i)))
                throw ParseError("gram is not epsilon-symmetric");
        }
}

bool FiniteLinkingForm::is_nonsingular() const
{
    auto G = numerators();
    int L = max_level();
    for (auto [l, r] : auxiliary_modules(*this)) {
        (void)r;
        if (det_mod_p(aux_block(G, orders, L, p, l), p) == 0) return false;
    }
    return true;
}

FiniteLinkingForm FiniteLinkingForm::direct_sum(const FiniteLinkingForm& o) const
{
    if (o.p != p && o.rank() > 0 && rank() > 0) throw ParseError("direct sum of forms at different primes");
    if (o.epsilon != epsilon && o.rank() > 0 && rank() > 0) throw MixedSymmetry();
    FiniteLinkingForm r = rank() ? *this : o;
    r.orders = orders;
    r.orders.insert(r.orders.end(), o.orders.begin(), o.orders.end());
    r.gram = gram.block_sum(o.gram);
    return r;
}

FiniteLinkingForm FiniteLinkingForm::negated() const
{
    FiniteLinkingForm r = *this;
    r.gram = gram.map([](const BigRat& q) { return mod_one(-q); });
    return r;
}

MixedLinkingForm to_mixed(const FiniteLinkingForm& f)
{
    MixedLinkingForm m;
    for (int l : f.orders) m.orders.push_back(ipow(BigInt(f.p), static_cast<unsigned>(l)));
    m.gram = f.gram;
    m.epsilon = f.epsilon;
    return m;
}

std::vector<std::pair<long, int>> factor_integer(const BigInt& n_in)
{
    BigInt n = abs(n_in);
    std::vector<std::pair<long, int>> out;
    if (n == 0) throw InternalError("cannot factor zero");
    for (long d = 2; BigInt(d) * d <= n; ++d) {
        if (d > 10000000) break;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.push_back({d, e});
    }
    if (n > 1) {
        if (!n.fits_slong_p() || mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw SearchSpaceTooLarge("group order has a prime factor beyond trial division");
        out.push_back({n.get_si(), 1});
    }
    return out;
}

std::map<long, FiniteLinkingForm> primary_decompose(const MixedLinkingForm& f)
{
    size_t n = f.orders.size();
    if (f.gram.rows() != n || f.gram.cols() != n) throw ParseError("gram size does not match the generator list");
    if (f.epsilon != 1 && f.epsilon != -1) throw ParseError("epsilon must be +1 or -1");
    std::set<long> primes;
    for (size_t i = 0; i < n; ++i) {
        if (f.orders[i] < 1) throw ParseError("generator orders must be positive");
        for (auto [q, e] : factor_integer(f.orders[i])) primes.insert(q);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!is_integer(f.gram(i, j) * BigRat(f.orders[i])) || !is_integer(f.gram(i, j) * BigRat(f.orders[j])))
                throw ParseError("pairing is not well defined on generator orders");
            if (!is_integer(f.gram(i, j) - BigRat(f.epsilon) * f.gram(j, i)))
                throw ParseError("gram is not epsilon-symmetric");
        }
    std::map<long, FiniteLinkingForm> out;
    for (long q : primes) {
        std::vector<size_t> idx;
        std::vector<BigInt> mult;
        FiniteLinkingForm part;
        part.p = q;
        part.epsilon = f.epsilon;
        for (size_t i = 0; i < n; ++i) {
            int v = valuation(f.orders[i], q);
            if (v == 0) continue;
            idx.push_back(i);
            part.orders.push_back(v);
            mult.push_back(f.orders[i] / ipow(BigInt(q), static_cast<unsigned>(v)));
        }
        part.gram = MatQ(idx.size(), idx.size());
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b)
                part.gram(a, b) = mod_one(BigRat(mult[a] * mult[b]) * f.gram(idx[a], idx[b]));
        if (!part.is_nonsingular()) throw SingularForm("adjoint is not bijective at p = " + std::to_string(q));
        out.emplace(q, std::move(part));
    }
    return out;
}

std::vector<HomogeneousPiece> homogeneous_split(const FiniteLinkingForm& f)
{
    f.validate();
    if (!f.is_nonsingular()) throw SingularForm();
    const long p = f.p;
    const int L = f.max_level();
    const long P = ppow(p, L);
    const size_t n = f.rank();
    auto G = f.numerators();
    std::vector<long> mod(n);
    for (size_t i = 0; i < n; ++i) mod[i] = ppow(p, f.orders[i]);

    using Vec = std::vector<long>;
    auto pair_num = [&](const Vec& u, const Vec& v) {
        i128 s = 0;
        for (size_t i = 0; i < n; ++i) {
            if (!u[i]) continue;
            for (size_t j = 0; j < n; ++j)
                if (v[j]) s = (s + static_cast<i128>(u[i]) * v[j] % P * G[i][j]) % P;
        }
        return md(static_cast<long>(s), P);
    };
    auto level_of = [&](const Vec& v) {
        int lv = 0;
        for (size_t i = 0; i < n; ++i) {
            long c = md(v[i], mod[i]);
            if (!c) continue;
            int val = 0;
            while (c % p == 0) {
                c /= p;
                ++val;
            }
            lv = std::max(lv, f.orders[i] - val);
        }
        return lv;
    };
    auto normalize = [&](Vec& v) {
        for (size_t i = 0; i < n; ++i) v[i] = md(v[i], mod[i]);
    };

    std::vector<Vec> rest;
    for (size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        rest.push_back(e);
    }
    std::vector<std::pair<int, Vec>> done;
    while (!rest.empty()) {
        int top = 0;
        for (auto& v : rest) top = std::max(top, level_of(v));
        long scale = ppow(p, L - top);  // pairings at level top are multiples of this
        std::vector<size_t> cand;
        for (size_t i = 0; i < rest.size(); ++i)
            if (level_of(rest[i]) == top) cand.push_back(i);
        auto unit_at = [&](size_t a, size_t b) { return (pair_num(rest[a], rest[b]) / scale) % p != 0; };
        std::vector<size_t> block;
        for (size_t a : cand)
            if (unit_at(a, a)) {
                block = {a};
                break;
            }
        if (block.empty()) {
            size_t ba = 0, bb = 0;
            bool found = false;
            for (size_t x = 0; x < cand.size() && !found; ++x)
                for (size_t y = x + 1; y < cand.size() && !found; ++y)
                    if (unit_at(cand[x], cand[y])) {
                        ba = cand[x];
                        bb = cand[y];
                        found = true;
                    }
            if (!found) throw SingularForm("no pivot at level " + std::to_string(top));
            if (p != 2 && f.epsilon == 1) {
                for (size_t i = 0; i < n; ++i) rest[ba][i] += rest[bb][i];
                normalize(rest[ba]);
                block = {ba};
            } else {
                block = {ba, bb};
            }
        }
        // M over Z/p^top: pairings inside the block, divided by scale.
        long Pt = ppow(p, top);
        size_t k = block.size();
        std::vector<std::vector<long>> M(k, std::vector<long>(k));
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b) M[a][b] = pair_num(rest[block[a]], rest[block[b]]) / scale;
        std::vector<std::vector<long>> Minv(k, std::vector<long>(k));
        if (k == 1) {
            Minv[0][0] = inv_mod(md(M[0][0], Pt), Pt);
        } else {
            long det = md(mulmod(M[0][0], M[1][1], Pt) - mulmod(M[0][1], M[1][0], Pt), Pt);
            long di = inv_mod(det, Pt);
            Minv[0][0] = mulmod(M[1][1], di, Pt);
            Minv[1][1] = mulmod(M[0][0], di, Pt);
            Minv[0][1] = md(-mulmod(M[0][1], di, Pt), Pt);
            Minv[1][0] = md(-mulmod(M[1][0], di, Pt), Pt);
        }
        std::vector<Vec> next;
        for (size_t w = 0; w < rest.size(); ++w) {
            if (std::find(block.begin(), block.end(), w) != block.end()) continue;
            Vec v = rest[w];
            std::vector<long> r(k);
            for (size_t b = 0; b < k; ++b) r[b] = pair_num(v, rest[block[b]]) / scale;
            for (size_t a = 0; a < k; ++a) {
                long c = 0;
                for (size_t b = 0; b < k; ++b) c = md(c + mulmod(r[b], Minv[b][a], Pt), Pt);
                for (size_t i = 0; i < n; ++i) v[i] = md(v[i] - mulmod(c, rest[block[a]][i], mod[i]), mod[i]);
            }
            next.push_back(v);
        }
        for (size_t a : block) done.push_back({top, rest[a]});
        rest = std::move(next);
    }

    std::map<int, std::vector<Vec>> by_level;
    for (auto& [l, v] : done) by_level[l].push_back(v);
    std::vector<HomogeneousPiece> out;
    for (auto it = by_level.rbegin(); it != by_level.rend(); ++it) {
        HomogeneousPiece piece;
        piece.level = it->first;
        const auto& vs = it->second;
        piece.form.p = p;
        piece.form.epsilon = f.epsilon;
        piece.form.orders.assign(vs.size(), it->first);
        piece.form.gram = MatQ(vs.size(), vs.size());
        piece.basis = MatZ(n, vs.size());
        for (size_t a = 0; a < vs.size(); ++a) {
            for (size_t i = 0; i < n; ++i) piece.basis(i, a) = vs[a][i];
            for (size_t b = 0; b < vs.size(); ++b)
                piece.form.gram(a, b) = mod_one(BigRat(BigInt(pair_num(vs[a], vs[b])), BigInt(P)));
        }
        out.push_back(std::move(piece));
    }
    return out;
}

std::map<int, int> auxiliary_modules(const FiniteLinkingForm& f)
{
    std::map<int, int> r;
    for (int l : f.orders)
        if (l > 0) ++r[l];
    return r;
}

AuxiliaryFormFp auxiliary_form(const FiniteLinkingForm& f, int level)
{
    if (f.p == 2) throw EvenPrimeUnsupported("auxiliary forms need an odd prime; use the oracle at p = 2");
    if (level < 1) throw ParseError("level must be positive");
    AuxiliaryFormFp a;
    a.p = f.p;
    a.level = level;
    a.symmetry = md(f.epsilon, f.p);
    a.gram = aux_block(f.numerators(), f.orders, f.max_level(), f.p, level);
    return a;
}

std::pair<int, int> iso_invariants_fp(const std::vector<std::vector<long>>& gram, long v, long p)
{
    if (p == 2) throw EvenPrimeUnsupported();
    int n = static_cast<int>(gram.size());
    if (n == 0) return {0, 1};
    long det = det_mod_p(gram, p);
    if (det == 0) throw SingularForm("auxiliary form is singular mod " + std::to_string(p));
    if (md(v, p) == p - 1) return {n, 1};
    if (md(v, p) != 1) throw InternalError("symmetry scalar must be +-1");
    return {n, legendre(det, p)};
}

WittClassFp witt_class_fp(const std::vector<std::vector<long>>& gram, long v, long p)
{
    auto [n, d] = iso_invariants_fp(gram, v, p);
    WittClassFp w;
    w.p = p;
    if (n == 0 || md(v, p) == p - 1) return w;
    w.rank_mod_2 = n % 2;
    int sign = ((n * (n - 1) / 2) % 2) ? legendre(p - 1, p) : 1;
    w.disc = d * sign;
    return w;
}

WittClassFp WittClassFp::operator+(const WittClassFp& o) const
{
    if (o.p != p) throw InternalError("adding Witt classes at different primes");
    WittClassFp r;
    r.p = p;
    r.rank_mod_2 = (rank_mod_2 + o.rank_mod_2) % 2;
    r.disc = disc * o.disc * ((rank_mod_2 && o.rank_mod_2) ? legendre(p - 1, p) : 1);
    return r;
}

std::string WittClassFp::name() const
{
    std::string ps = std::to_string(p);
    if (is_zero()) return "0";
    if (rank_mod_2 == 1) return (disc == 1 ? "A_" : "B_") + ps;
    return p % 4 == 3 ? "2A_" + ps : "A_" + ps + "+B_" + ps;
}

DWMultiSignatureZ dw_multisignature(const FiniteLinkingForm& f)
{
    if (f.rank() == 0) return {};
    if (f.p == 2) throw EvenPrimeUnsupported("2-primary part present; use the oracle at p = 2");
    f.validate();
    if (!f.is_nonsingular()) throw SingularForm();
    DWMultiSignatureZ ms;
    for (auto [l, r] : auxiliary_modules(f)) {
        (void)r;
        auto a = auxiliary_form(f, l);
        ms[{f.p, l}] = witt_class_fp(a.gram, a.symmetry, f.p);
    }
    return ms;
}

DWMultiSignatureZ dw_multisignature(const MixedLinkingForm& f)
{
    DWMultiSignatureZ ms;
    for (auto& [q, part] : primary_decompose(f)) {
        auto m = dw_multisignature(part);
        ms.insert(m.begin(), m.end());
    }
    return ms;
}

std::map<long, WittClassFp> forgetful_witt(const DWMultiSignatureZ& ms)
{
    std::map<long, WittClassFp> out;
    for (auto& [key, w] : ms) {
        auto [q, l] = key;
        auto it = out.find(q);
        if (it == out.end()) {
            WittClassFp z;
            z.p = q;
            it = out.emplace(q, z).first;
        }
        if (l % 2 == 1) it->second = it->second + w;
    }
    return out;
}

DWMultiSignatureZ multisignature_sum(const DWMultiSignatureZ& a, const DWMultiSignatureZ& b)
{
    DWMultiSignatureZ r = a;
    for (auto& [k, w] : b) {
        auto it = r.find(k);
        if (it == r.end()) r.emplace(k, w);
        else it->second = it->second + w;
    }
    return r;
}

bool classify_multisignature(const DWMultiSignatureZ& ms, Question q)
{
    if (q == Question::Hyperbolic) {
        for (auto& [k, w] : ms)
            if (!w.is_zero()) return false;
        return true;
    }
    for (auto& [k, w] : forgetful_witt(ms))
        if (!w.is_zero()) return false;
    return true;
}

bool classify(const MixedLinkingForm& f, Question q) { return classify_multisignature(dw_multisignature(f), q); }
bool classify(const FiniteLinkingForm& f, Question q) { return classify_multisignature(dw_multisignature(f), q); }

BoundaryForm boundary_of_form(const MatZ& alpha, int epsilon)
{
    if (!alpha.is_square()) throw ParseError("form matrix must be square");
    if (epsilon != 1 && epsilon != -1) throw ParseError("epsilon must be +1 or -1");
    if (alpha != alpha.transpose().scaled(BigInt(epsilon))) throw ParseError("form matrix is not epsilon-symmetric");
    size_t n = alpha.rows();
    MatQ aq = to_q(alpha);
    if (n > 0 && determinant(aq) == 0) throw SingularOverFractionField("det(alpha) = 0");
    BoundaryForm out;
    out.form.epsilon = epsilon;
    if (n == 0) return out;
    SNFZ s = smith_normal_form(alpha);
    MatQ ainv = inverse(aq);
    std::vector<size_t> keep;
    for (size_t i = 0; i < n; ++i)
        if (abs(s.divisors[i]) != 1) keep.push_back(i);
    MatQ gens = to_q(s.Uinv.columns(keep));
    MatQ g = gens.transpose() * ainv * gens;
    out.form.gram = g.map([](const BigRat& q) { return mod_one(q); });
    for (size_t i : keep) out.form.orders.push_back(abs(s.divisors[i]));
    out.to_coker = MatZ(keep.size(), n);
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t j = 0; j < n; ++j) out.to_coker(a, j) = s.U(keep[a], j);
    return out;
}

bool verify_boundary_complementary(const MatZ& alpha, const MatZ& lp, const MatZ& lm)
{
    size_t n = alpha.rows();
    for (const MatZ* l : {&lp, &lm}) {
        if (l->rows() != n) throw NotAnSLagrangian("basis has the wrong ambient rank");
        if (n % 2 != 0 || l->cols() != n / 2 || rank(to_q(*l)) != n / 2)
            throw NotAnSLagrangian("rank does not halve");
        if (!(l->transpose() * alpha * *l).is_zero_matrix()) throw NotAnSLagrangian("form does not vanish on the submodule");
    }
    size_t k = n / 2;
    // L+ + L- -> K + K*,  (a, b) |-> (j+ a + j- b, alpha j- b)
    MatZ first(2 * n, 2 * k);
    MatZ aj = alpha * lm;
    for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < k; ++c) {
            first(i, c) = lp(i, c);
            first(i, k + c) = lm(i, c);
            first(n + i, k + c) = aj(i, c);
        }
    // K + K* -> L+* + L-*,  (x, y) |-> (-j+^T alpha x + j+^T y, j-^T y)
    MatZ second(2 * k, 2 * n);
    MatZ ja = lp.transpose() * alpha;
    for (size_t r = 0; r < k; ++r)
        for (size_t j = 0; j < n; ++j) {
            second(r, j) = -ja(r, j);
            second(r, n + j) = lp(j, r);
            second(k + r, n + j) = lm(j, r);
        }
    if (!(second * first).is_zero_matrix()) return false;
    return smith_all_ones(first, 2 * k) && smith_all_ones(second, 2 * k);
}

BigInt subgroup_order(const std::vector<int>& orders, long p, const MatZ& gens)
{
    size_t n = orders.size();
    if (n == 0) return 1;
    MatZ rows(gens.cols() + n, n);
    for (size_t c = 0; c < gens.cols(); ++c)
        for (size_t i = 0; i < n; ++i) rows(c, i) = gens(i, c);
    BigInt total = 1;
    for (size_t i = 0; i < n; ++i) {
        BigInt m = ipow(BigInt(p), static_cast<unsigned>(orders[i]));
        rows(gens.cols() + i, i) = m;
        total *= m;
    }
    MatZ h = hermite_normal_form(rows);
    BigInt det = 1;
    for (size_t i = 0; i < n; ++i) det *= h(i, i);
    return total / det;
}

bool is_lagrangian(const FiniteLinkingForm& f, const MatZ& gens)
{
    MatQ g = to_q(gens);
    MatQ v = g.transpose() * f.gram * g;
    for (size_t i = 0; i < v.rows(); ++i)
        for (size_t j = 0; j < v.cols(); ++j)
            if (!is_integer(v(i, j))) return false;
    BigInt o = subgroup_order(f.orders, f.p, gens);
    return o * o == f.group_order();
}

}  // namespace wittkit
