#include "bsato/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>

namespace bsato {

Budget Budget::from_env() {
    Budget b;
    auto read = [](const char* name, long& slot) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            long parsed = std::strtol(v, &end, 10);
            if (end && *end == '\0' && parsed >= 0) slot = parsed;
        }
    };
    read("BSATO_PAIR_LIMIT", b.pair_limit);
    read("BSATO_DEGREE_CAP", b.degree_cap);
    read("BSATO_WALL_MS", b.wall_ms);
    return b;
}

namespace {

using Clock = std::chrono::steady_clock;

// integer-coefficient polynomial, terms sorted descending by the active order
struct IPoly {
    std::vector<std::pair<Mono, Int>> t;
    bool empty() const { return t.empty(); }
    const Mono& lm() const { return t.front().first; }
    const Int& lc() const { return t.front().second; }
    long degree() const {
        long d = -1;
        for (const auto& [m, c] : t) d = std::max(d, static_cast<long>(mono_degree(m)));
        return d;
    }
};

Int vec_content(const std::vector<std::pair<Mono, Int>>& t) {
    Int g = 0;
    for (const auto& [m, c] : t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IPoly& p, Rat* scale = nullptr) {
    if (p.t.empty()) return;
    Int g = vec_content(p.t);
    if (p.t.front().second < 0) g = -g;
    if (g != 1) {
        for (auto& [m, c] : p.t) c /= g;
        if (scale) *scale /= Rat(g);
    }
}

struct Engine {
    const WeylRing& ring;
    const TermOrder& ord;
    Budget budget;
    BudgetUse use;
    Clock::time_point t0 = Clock::now();
    bool tracked = false;
    bool commutative = false;
    WeylRingPtr ring_ptr;

    Engine(const WeylRingPtr& rp, const TermOrder& o, const Budget& b)
        : ring(*rp), ord(o), budget(b), ring_ptr(rp) {
        commutative = ring.npos() == 0;
    }

    void check_wall() {
        if (budget.wall_ms <= 0) return;
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (ms > static_cast<double>(budget.wall_ms)) {
            use.wall_ms = ms;
            throw budget_exceeded("wall-clock budget exceeded", use);
        }
    }

    bool greater(const Mono& a, const Mono& b) const { return ord.cmp(a, b) > 0; }

    IPoly from_elem(const WeylElem& e) const {
        IPoly p;
        Int den_lcm = 1;
        for (const auto& [m, c] : e.terms())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& [m, c] : e.terms()) {
            Rat scaled = c * Rat(den_lcm);
            p.t.emplace_back(m, scaled.get_num());
        }
        std::sort(p.t.begin(), p.t.end(),
                  [this](const auto& a, const auto& b) { return greater(a.first, b.first); });
        make_primitive(p);
        return p;
    }

    WeylElem to_elem(const IPoly& p, bool monic) const {
        WeylElem e(ring_ptr);
        if (p.empty()) return e;
        Rat lead(p.lc());
        for (const auto& [m, c] : p.t) e.add_term(m, monic ? Rat(c) / lead : Rat(c));
        return e;
    }

    // c1*a + c2*b, merged
    static IPoly axpy(const IPoly& a, const Int& c1, const IPoly& b, const Int& c2,
                      const Engine& eng) {
        IPoly r;
        r.t.reserve(a.t.size() + b.t.size());
        std::size_t i = 0, j = 0;
        while (i < a.t.size() && j < b.t.size()) {
            int c = eng.ord.cmp(a.t[i].first, b.t[j].first);
            if (c > 0) {
                Int v = a.t[i].second * c1;
                if (v != 0) r.t.emplace_back(a.t[i].first, std::move(v));
                ++i;
            } else if (c < 0) {
                Int v = b.t[j].second * c2;
                if (v != 0) r.t.emplace_back(b.t[j].first, std::move(v));
                ++j;
            } else {
                Int v = a.t[i].second * c1 + b.t[j].second * c2;
                if (v != 0) r.t.emplace_back(a.t[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        for (; i < a.t.size(); ++i) {
            Int v = a.t[i].second * c1;
            if (v != 0) r.t.emplace_back(a.t[i].first, std::move(v));
        }
        for (; j < b.t.size(); ++j) {
            Int v = b.t[j].second * c2;
            if (v != 0) r.t.emplace_back(b.t[j].first, std::move(v));
        }
        return r;
    }

    // left product q * a for a single monomial q (normally ordered expansion)
    IPoly mono_left_mul(const Mono& q, const IPoly& a) const {
        std::vector<std::pair<Mono, Int>> acc;
        std::size_t np = ring.npos();
        for (const auto& [m, c] : a.t) {
            std::vector<std::size_t> cross;
            for (std::size_t i = 0; i < np; ++i)
                if (q[ring.der_index(i)] > 0 && m[ring.pos_index(i)] > 0) cross.push_back(i);
            Mono base = mono_mul(q, m);
            if (cross.empty()) {
                acc.emplace_back(std::move(base), c);
                continue;
            }
            std::vector<unsigned> k(cross.size(), 0);
            for (;;) {
                Int coef = c;
                Mono mm = base;
                for (std::size_t jj = 0; jj < cross.size(); ++jj) {
                    std::size_t i = cross[jj];
                    unsigned b = q[ring.der_index(i)], cc = m[ring.pos_index(i)], kk = k[jj];
                    if (kk) {
                        Int f, b1, b2;
                        mpz_fac_ui(f.get_mpz_t(), kk);
                        mpz_bin_uiui(b1.get_mpz_t(), b, kk);
                        mpz_bin_uiui(b2.get_mpz_t(), cc, kk);
                        coef *= f * b1 * b2;
                        mm[ring.pos_index(i)] = static_cast<std::uint16_t>(mm[ring.pos_index(i)] - kk);
                        mm[ring.der_index(i)] = static_cast<std::uint16_t>(mm[ring.der_index(i)] - kk);
                    }
                }
                acc.emplace_back(std::move(mm), std::move(coef));
                std::size_t jj = 0;
                for (; jj < cross.size(); ++jj) {
                    std::size_t i = cross[jj];
                    unsigned lim = std::min<unsigned>(q[ring.der_index(i)], m[ring.pos_index(i)]);
                    if (k[jj] < lim) {
                        ++k[jj];
                        break;
                    }
                    k[jj] = 0;
                }
                if (jj == cross.size()) break;
            }
        }
        std::sort(acc.begin(), acc.end(),
                  [this](const auto& x, const auto& y) { return greater(x.first, y.first); });
        IPoly r;
        for (auto& [m, c] : acc) {
            if (!r.t.empty() && r.t.back().first == m)
                r.t.back().second += c;
            else
                r.t.emplace_back(std::move(m), std::move(c));
        }
        std::erase_if(r.t, [](const auto& mc) { return mc.second == 0; });
        return r;
    }

    // --- tracked side-car -------------------------------------------------
    // rep[k][i]: basis[k] = sum_i rep[k][i] * gens[i], exact over Q.
    std::vector<std::vector<WeylElem>> reps;

    static void rep_scale(std::vector<WeylElem>& rep, const Rat& c) {
        for (auto& e : rep) e = e * c;
    }
    void rep_axpy(std::vector<WeylElem>& dst, const Rat& c1, const std::vector<WeylElem>& src,
                  const Rat& c2, const Mono* left = nullptr) const {
        for (std::size_t i = 0; i < dst.size(); ++i) {
            WeylElem term = src[i] * c2;
            if (left) term = weyl_mul(WeylElem::monomial(ring_ptr, *left, Rat(1)), term);
            dst[i] = dst[i] * c1 + term;
        }
    }

    // --- basis and pair queue ---------------------------------------------
    std::vector<IPoly> basis;

    struct Pair {
        long deg;
        Mono lcm;
        int i, j;
    };
    struct PairLess {
        const TermOrder* ord;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.deg != b.deg) return a.deg < b.deg;
            int c = ord->cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<Pair, PairLess> queue{PairLess{nullptr}};

    bool coprime_lms(int i, int j) const {
        const Mono& a = basis[static_cast<std::size_t>(i)].lm();
        const Mono& b = basis[static_cast<std::size_t>(j)].lm();
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] > 0 && b[k] > 0) return false;
        return true;
    }

    void gm_update(int t) {
        const Mono& lt = basis[static_cast<std::size_t>(t)].lm();
        struct Cand {
            Mono lcm;
            int i;
            bool alive = true;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < t; ++i)
            cands.push_back({mono_lcm(basis[static_cast<std::size_t>(i)].lm(), lt), i});

        // M: keep only minimal lcms
        for (auto& a : cands) {
            for (const auto& b : cands) {
                if (&a == &b || !a.alive || !b.alive) continue;
                if (b.lcm != a.lcm && mono_divides(b.lcm, a.lcm)) {
                    a.alive = false;
                    break;
                }
            }
        }
        // F: one representative per equal lcm; with the product criterion on
        // commutative rings a class containing a coprime pair dies entirely.
        std::map<Mono, std::vector<Cand*>> classes;
        for (auto& a : cands)
            if (a.alive) classes[a.lcm].push_back(&a);
        for (auto& [l, cls] : classes) {
            bool kill_all = false;
            if (commutative)
                for (auto* a : cls)
                    if (coprime_lms(a->i, t)) kill_all = true;
            for (std::size_t k = 0; k < cls.size(); ++k)
                if (kill_all || k > 0) cls[k]->alive = false;
        }
        // B: prune old pairs superseded by the new element
        for (auto it = queue.begin(); it != queue.end();) {
            const Mono& l = it->lcm;
            if (mono_divides(lt, l) &&
                mono_lcm(basis[static_cast<std::size_t>(it->i)].lm(), lt) != l &&
                mono_lcm(basis[static_cast<std::size_t>(it->j)].lm(), lt) != l)
                it = queue.erase(it);
            else
                ++it;
        }
        for (const auto& a : cands)
            if (a.alive)
                queue.insert(Pair{static_cast<long>(mono_degree(a.lcm)), a.lcm, a.i, t});
    }

    // fraction-free full normal form; returns nf (primitive).
    // When track_out != null, fills quotients/scale with
    //   scale * input = sum_k quotients[k] * basis[k] + nf_exact,
    // where nf_exact = nf * nf_scale (all rational bookkeeping exact).
    struct NFTrack {
        Rat scale = Rat(1);                 // multiplier applied to the input
        std::vector<WeylElem> quotients;    // one per basis element
        Rat nf_scale = Rat(1);              // nf_exact = nf * nf_scale
    };

    IPoly normal_form(IPoly r, NFTrack* track) {
        std::vector<std::pair<Mono, Int>> done;
        if (track) track->quotients.assign(basis.size(), WeylElem(ring_ptr));
        long guard = 0;
        while (!r.empty()) {
            if ((++guard & 0x3ff) == 0) check_wall();
            const Mono& m = r.lm();
            int hit = -1;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (!basis[k].empty() && mono_divides(basis[k].lm(), m)) {
                    hit = static_cast<int>(k);
                    break;
                }
            }
            if (hit < 0) {
                done.push_back(r.t.front());
                r.t.erase(r.t.begin());
                continue;
            }
            const IPoly& g = basis[static_cast<std::size_t>(hit)];
            Mono q = mono_quotient(m, g.lm());
            IPoly prod = mono_left_mul(q, g);
            // lambda = lcm(lc_r, lc_prod); r <- (lambda/lc_r) r - (lambda/lc_prod) prod
            Int lambda;
            mpz_lcm(lambda.get_mpz_t(), r.lc().get_mpz_t(), prod.lc().get_mpz_t());
            Int cr = lambda / r.lc();
            Int cp = lambda / prod.lc();
            for (auto& [mm, cc] : done) cc *= cr;
            if (track) {
                track->scale *= Rat(cr);
                track->nf_scale *= Rat(cr);
                for (auto& qk : track->quotients) qk = qk * Rat(cr);
                track->quotients[static_cast<std::size_t>(hit)].add_term(q, Rat(cp));
            }
            r = axpy(r, cr, prod, -cp, *this);
            // periodic content control
            if ((guard & 0x3f) == 0 && !r.empty()) {
                Int g2 = vec_content(r.t);
                Int g3 = done.empty() ? g2 : vec_content(done);
                Int g4;
                mpz_gcd(g4.get_mpz_t(), g2.get_mpz_t(), g3.get_mpz_t());
                if (g4 > 1 && !track) {
                    for (auto& [mm, cc] : r.t) cc /= g4;
                    for (auto& [mm, cc] : done) cc /= g4;
                }
            }
        }
        IPoly out;
        out.t = std::move(done);
        if (track && !out.t.empty()) {
            Int g = vec_content(out.t);
            if (out.t.front().second < 0) g = -g;
            if (g != 1) {
                for (auto& [mm, cc] : out.t) cc /= g;
                track->nf_scale = Rat(g) / track->scale;
            } else {
                track->nf_scale = Rat(1) / track->scale;
            }
            // now nf_exact(as fraction of input) = out * nf_scale with
            //   input = sum (quotients[k]/scale) basis[k] + out*nf_scale
        } else if (track) {
            track->nf_scale = Rat(1) / track->scale;
        } else {
            make_primitive(out);
        }
        return out;
    }

    IPoly spoly(int i, int j, const Mono& l, std::vector<WeylElem>* rep_out) {
        const IPoly& a = basis[static_cast<std::size_t>(i)];
        const IPoly& b = basis[static_cast<std::size_t>(j)];
        Mono qa = mono_quotient(l, a.lm());
        Mono qb = mono_quotient(l, b.lm());
        IPoly pa = mono_left_mul(qa, a);
        IPoly pb = mono_left_mul(qb, b);
        Int lambda;
        mpz_lcm(lambda.get_mpz_t(), pa.lc().get_mpz_t(), pb.lc().get_mpz_t());
        Int ca = lambda / pa.lc();
        Int cb = lambda / pb.lc();
        if (tracked && rep_out) {
            rep_out->assign(reps.front().size(), WeylElem(ring_ptr));
            rep_axpy(*rep_out, Rat(1), reps[static_cast<std::size_t>(i)], Rat(ca), &qa);
            rep_axpy(*rep_out, Rat(1), reps[static_cast<std::size_t>(j)], Rat(-cb), &qb);
        }
        return axpy(pa, ca, pb, -cb, *this);
    }

    void check_degree(const IPoly& p) {
        long d = p.degree();
        use.max_degree = std::max(use.max_degree, d);
        if (d > budget.degree_cap)
            throw budget_exceeded("degree cap exceeded (basis degree " + std::to_string(d) + ")",
                                  use);
    }

    void run(const std::vector<WeylElem>& gens) {
        queue = std::set<Pair, PairLess>(PairLess{&ord});
        std::size_t ngens = gens.size();
        for (std::size_t gi = 0; gi < ngens; ++gi) {
            const auto& g = gens[gi];
            if (g.is_zero()) continue;
            IPoly p = from_elem(g);
            check_degree(p);
            basis.push_back(std::move(p));
            if (tracked) {
                std::vector<WeylElem> rep(ngens, WeylElem(ring_ptr));
                // account for the primitive normalization of from_elem
                Rat lead_in(0);
                {
                    // effective scalar: basis element = scalar * gen
                    const IPoly& q = basis.back();
                    // find the leading term of gen under this order
                    Mono lm_g = q.lm();
                    lead_in = g.terms().at(lm_g);
                }
                rep[gi] = WeylElem(ring_ptr, Rat(basis.back().lc()) / lead_in);
                reps.push_back(std::move(rep));
            }
            gm_update(static_cast<int>(basis.size()) - 1);
        }
        while (!queue.empty()) {
            check_wall();
            Pair pr = *queue.begin();
            queue.erase(queue.begin());
            if (++use.pairs > budget.pair_limit)
                throw budget_exceeded("pair-reduction budget exceeded", use);
            std::vector<WeylElem> rep;
            IPoly sp = spoly(pr.i, pr.j, pr.lcm, &rep);
            NFTrack track;
            IPoly nf = normal_form(std::move(sp), tracked ? &track : nullptr);
            if (nf.empty()) continue;
            check_degree(nf);
            if (tracked) {
                // nf = (spoly - sum q_k basis_k) / scale ... combine reps
                std::vector<WeylElem> nrep(rep.size(), WeylElem(ring_ptr));
                rep_axpy(nrep, Rat(1), rep, Rat(1));
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    for (const auto& [qm, qc] : track.quotients[k].terms()) {
                        std::vector<WeylElem> tmp(rep.size(), WeylElem(ring_ptr));
                        rep_axpy(tmp, Rat(1), reps[k], -qc / track.scale, &qm);
                        for (std::size_t ii = 0; ii < nrep.size(); ++ii)
                            nrep[ii] = nrep[ii] + tmp[ii];
                    }
                }
                // currently nrep corresponds to spoly - sum(q/scale) = nf*nf_scale*?; fix scale:
                // spoly = sum_k (q_k/scale?) ... see NFTrack invariant:
                // scale*spoly = sum q_k basis_k + nf/nf_scale_inv; we assembled
                // nrep = spoly - sum (q_k/scale) basis_k = (nf * nf_scale)
                Rat inv = Rat(1) / track.nf_scale;
                for (auto& e : nrep) e = e * inv;
                reps.push_back(std::move(nrep));
            }
            basis.push_back(std::move(nf));
            gm_update(static_cast<int>(basis.size()) - 1);
        }
        autoreduce();
    }

    void autoreduce() {
        // minimalize
        std::vector<std::size_t> order_idx(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
        std::sort(order_idx.begin(), order_idx.end(), [this](std::size_t a, std::size_t b) {
            int c = ord.cmp(basis[a].lm(), basis[b].lm());
            if (c != 0) return c < 0;
            return a < b;
        });
        std::vector<IPoly> kept;
        std::vector<std::vector<WeylElem>> kept_reps;
        for (std::size_t idx : order_idx) {
            const Mono& m = basis[idx].lm();
            bool dominated = false;
            for (const auto& k : kept)
                if (mono_divides(k.lm(), m)) {
                    dominated = true;
                    break;
                }
            if (!dominated) {
                kept.push_back(std::move(basis[idx]));
                if (tracked) kept_reps.push_back(std::move(reps[idx]));
            }
        }
        basis = std::move(kept);
        reps = std::move(kept_reps);
        // tail-reduce each against the others
        for (std::size_t i = 0; i < basis.size(); ++i) {
            IPoly self = std::move(basis[i]);
            basis[i] = IPoly{};  // excluded from reduction set
            NFTrack track;
            IPoly nf = normal_form(std::move(self), tracked ? &track : nullptr);
            if (tracked) {
                std::vector<WeylElem> nrep(reps[i].size(), WeylElem(ring_ptr));
                rep_axpy(nrep, Rat(1), reps[i], Rat(1));
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    for (const auto& [qm, qc] : track.quotients[k].terms()) {
                        std::vector<WeylElem> tmp(reps[i].size(), WeylElem(ring_ptr));
                        rep_axpy(tmp, Rat(1), reps[k], -qc / track.scale, &qm);
                        for (std::size_t ii = 0; ii < nrep.size(); ++ii)
                            nrep[ii] = nrep[ii] + tmp[ii];
                    }
                }
                Rat inv = Rat(1) / track.nf_scale;
                for (auto& e : nrep) e = e * inv;
                reps[i] = std::move(nrep);
            }
            basis[i] = std::move(nf);
        }
    }
};

}  // namespace

WeylElem reduce(const WeylElem& e, std::span<const WeylElem> basis, const TermOrder& ord) {
    if (e.is_zero()) return e;
    Engine eng(e.ring(), ord, Budget{});
    for (const auto& g : basis)
        if (!g.is_zero()) eng.basis.push_back(eng.from_elem(g));
    Engine::NFTrack track;
    IPoly nf = eng.normal_form(eng.from_elem(e), &track);
    // from_elem normalized e to a primitive integer polynomial; undo both scales
    IPoly orig = eng.from_elem(e);
    Rat in_scale(1);
    if (!orig.empty()) {
        const Mono& lm = orig.lm();
        in_scale = Rat(orig.lc()) / e.terms().at(lm);
    }
    WeylElem out = eng.to_elem(nf, false);
    return out * (track.nf_scale / in_scale);
}

std::vector<WeylElem> buchberger(const DIdeal& ideal, const TermOrder& ord, const Budget& budget,
                                 BudgetUse* use) {
    if (!ord.admissible_for(*ideal.ring))
        throw std::invalid_argument("term order is not admissible for this Weyl ring");
    Engine eng(ideal.ring, ord, budget);
    try {
        eng.run(ideal.gens);
    } catch (...) {
        if (use) *use = eng.use;
        throw;
    }
    if (use) *use = eng.use;
    std::vector<WeylElem> out;
    out.reserve(eng.basis.size());
    for (const auto& p : eng.basis) out.push_back(eng.to_elem(p, true));
    return out;
}

TrackedBasis buchberger_tracked(const DIdeal& ideal, const TermOrder& ord, const Budget& budget,
                                BudgetUse* use) {
    if (!ord.admissible_for(*ideal.ring))
        throw std::invalid_argument("term order is not admissible for this Weyl ring");
    Engine eng(ideal.ring, ord, budget);
    eng.tracked = true;
    try {
        eng.run(ideal.gens);
    } catch (...) {
        if (use) *use = eng.use;
        throw;
    }
    if (use) *use = eng.use;
    TrackedBasis out;
    for (std::size_t k = 0; k < eng.basis.size(); ++k) {
        Rat lead(eng.basis[k].lc());
        out.basis.push_back(eng.to_elem(eng.basis[k], true));
        auto rep = eng.reps[k];
        for (auto& e : rep) e = e * (Rat(1) / lead);
        out.rep.push_back(std::move(rep));
    }
    return out;
}

TrackedNF reduce_tracked(const WeylElem& e, std::span<const WeylElem> basis,
                         const TermOrder& ord) {
    TrackedNF out;
    if (e.is_zero()) {
        out.nf = e;
        out.quotients.assign(basis.size(), WeylElem(e.ring()));
        return out;
    }
    Engine eng(e.ring(), ord, Budget{});
    eng.tracked = true;
    for (const auto& g : basis) eng.basis.push_back(eng.from_elem(g));
    // track against the *monic-normalized* internal forms; rescale after
    Engine::NFTrack track;
    IPoly orig = eng.from_elem(e);
    Rat in_scale = Rat(orig.lc()) / e.terms().at(orig.lm());
    IPoly nf = eng.normal_form(std::move(orig), &track);
    out.nf = eng.to_elem(nf, false) * (track.nf_scale / in_scale);
    // scale*orig = sum q_k intbasis_k + nf_exact
    //  => e = sum q_k/(scale*in_scale) intbasis_k + nf_out
    // intbasis_k = basis_k * (int_lc / basis_lc)
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Rat conv(1);
        if (!eng.basis[k].empty()) {
            const Mono& lm = eng.basis[k].lm();
            conv = Rat(eng.basis[k].lc()) / basis[k].terms().at(lm);
        }
        out.quotients.push_back(track.quotients[k] * (conv / (track.scale * in_scale)));
    }
    return out;
}

std::vector<WeylElem> eliminate(const DIdeal& ideal, const std::vector<std::string>& drop,
                                const Budget& budget, BudgetUse* use) {
    const auto& R = *ideal.ring;
    std::vector<int> front;
    std::vector<bool> dropped(R.nsym(), false);
    for (const auto& name : drop) {
        int idx = R.index_of(name);
        if (idx < 0) throw std::invalid_argument("eliminate: unknown symbol '" + name + "'");
        dropped[static_cast<std::size_t>(idx)] = true;
        front.push_back(idx);
    }
    // pairing rule: a dropped position requires its derivation dropped too
    for (std::size_t i = 0; i < R.npos(); ++i) {
        bool dp = dropped[R.pos_index(i)], dd = dropped[R.der_index(i)];
        if (dp != dd)
            throw std::invalid_argument(
                "eliminate: position and derivation symbols must be dropped together");
    }
    std::sort(front.begin(), front.end());
    if (front.empty()) return buchberger(ideal, TermOrder::degrevlex(R.nsym()), budget, use);
    TermOrder ord = TermOrder::block_elim(front, R.nsym());
    auto gb = buchberger(ideal, ord, budget, use);
    std::vector<WeylElem> out;
    for (const auto& g : gb) {
        bool free = true;
        for (const auto& [m, c] : g.terms())
            for (int idx : front)
                if (m[static_cast<std::size_t>(idx)] != 0) {
                    free = false;
                    break;
                }
        if (free) out.push_back(g);
    }
    return out;
}

DIdeal commutative_ideal(const std::vector<MPoly>& gens) {
    if (gens.empty()) throw std::invalid_argument("commutative_ideal: no generators");
    auto ring = make_weyl_ring({}, {}, gens.front().ring()->vars(), {});
    DIdeal I;
    I.ring = ring;
    for (const auto& g : gens)
        if (!g.is_zero()) I.gens.push_back(lift_poly(g, ring));
    return I;
}

bool is_trivial_ideal(const std::vector<MPoly>& gens, const Budget& budget) {
    DIdeal I = commutative_ideal(gens);
    if (I.gens.empty()) return false;
    auto gb = buchberger(I, TermOrder::degrevlex(I.ring->nsym()), budget);
    return gb.size() == 1 && gb.front().total_degree() == 0;
}

long ideal_dimension(const std::vector<MPoly>& gens, const Budget& budget) {
    DIdeal I = commutative_ideal(gens);
    std::size_t n = I.ring->nsym();
    if (I.gens.empty()) return static_cast<long>(n);
    TermOrder ord = TermOrder::degrevlex(n);
    auto gb = buchberger(I, ord, budget);
    std::vector<std::uint64_t> supports;
    for (const auto& g : gb) {
        Mono lm;
        for (const auto& [m, c] : g.terms())
            if (lm.empty() || ord.cmp(m, lm) > 0) lm = m;
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lm[i] > 0) mask |= (std::uint64_t{1} << i);
        if (mask == 0) return -1;  // unit ideal
        supports.push_back(mask);
    }
    long best = 0;
    std::uint64_t full = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (std::uint64_t S = 0; S <= full; ++S) {
        bool independent = true;
        for (std::uint64_t sup : supports)
            if ((sup & ~S) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, static_cast<long>(__builtin_popcountll(S)));
    }
    return best;
}

bool codim_check(const std::vector<MPoly>& gens, int r, const Budget& budget) {
    if (gens.empty()) return false;
    long n = static_cast<long>(gens.front().ring()->size());
    return ideal_dimension(gens, budget) == n - r;
}

}  // namespace bsato
