#include "toricdef/deformation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toricdef {

GradedMatrix GradedMatrix::from_rows(const Ring& ring,
                                     const std::vector<std::vector<std::string>>& rows) {
    GradedMatrix m;
    m.rows = rows.size();
    m.cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != m.cols)
            throw std::invalid_argument("graded matrix: ragged rows");
        for (const std::string& txt : row) m.entries.push_back(Polynomial::parse(ring, txt));
    }
    return m;
}

GradedMatrix GradedMatrix::transpose() const {
    GradedMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.entries.resize(entries.size(), Polynomial());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.entries[j * rows + i] = at(i, j);
    t.row_shifts = col_shifts;
    t.col_shifts = row_shifts;
    return t;
}

void SingularityPresentation::validate() const {
    if (weights.size() != ring.nvars())
        throw std::invalid_argument(label + ": weight count mismatch");
    for (const Int& w : weights)
        if (w <= 0) throw std::invalid_argument(label + ": weights must be positive");
    for (const Polynomial& g : generators)
        if (!g.homogeneous_degree(weights))
            throw std::invalid_argument(label + ": generator not homogeneous");
}

GradedMatrix jacobian(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("jacobian: no generators");
    const Ring& ring = gens[0].ring();
    GradedMatrix m;
    m.rows = ring.nvars();
    m.cols = gens.size();
    m.entries.reserve(m.rows * m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) m.entries.push_back(gens[j].derivative(i));
    return m;
}

T1Report hypersurface_t1(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("hypersurface_t1: zero polynomial");
    const Ring& ring = f.ring();
    std::vector<Polynomial> gens = {f};
    for (std::size_t v = 0; v < ring.nvars(); ++v) gens.push_back(f.derivative(v));

    GroebnerBasis gb = buchberger(gens, ring);
    std::optional<Int> dim = quotient_dimension(gb);

    T1Report rep;
    rep.method = "hypersurface";
    rep.ext2_known = true;
    rep.ext2 = 0;
    if (!dim) {
        rep.status = T1Status::Infinite;
        rep.note = "non-isolated singularity: quotient by the jacobian ideal is infinite";
        return rep;
    }
    rep.total = *dim;

    // Ledger: standard monomials grouped by total degree.
    std::map<Int, Int> by_degree;
    std::vector<Int> ones(ring.nvars(), Int(1));
    Int deg = 0;
    Int seen = 0;
    while (seen < *dim) {
        std::vector<Monomial> piece = monomials_of_weighted_degree(
            ring.nvars(), deg, ones, ring.order());
        Int cnt = 0;
        for (const Monomial& m : piece) {
            bool standard = true;
            for (const Polynomial& g : gb.generators)
                if (g.leading_monomial().divides(m)) { standard = false; break; }
            if (standard) ++cnt;
        }
        if (cnt != 0) rep.per_degree.emplace_back(deg, cnt);
        seen += cnt;
        ++deg;
    }
    return rep;
}

namespace {

struct ChainShifts {
    std::vector<Int> source;  // inner columns
    std::vector<Int> middle;  // inner rows == outer columns
    std::vector<Int> target;  // outer rows
};

// Solve col_shift[j] - row_shift[i] = deg(entry) over the chain's
// bipartite incidence graph, anchoring each component at zero.
ChainShifts infer_chain_shifts(const GradedMatrix& outer, const GradedMatrix& inner,
                               const std::vector<Int>& weights,
                               const std::string& label) {
    if (outer.cols != inner.rows)
        throw std::invalid_argument(label + ": outer/inner shapes incompatible");

    const std::size_t n_src = inner.cols, n_mid = inner.rows, n_tgt = outer.rows;
    const std::size_t total = n_src + n_mid + n_tgt;
    std::vector<Int> shift(total, 0);
    std::vector<bool> known(total, false);

    struct Edge {
        std::size_t hi, lo;  // shift[hi] - shift[lo] = deg
        Int deg;
    };
    std::vector<Edge> edges;
    auto degree_of = [&](const Polynomial& p) -> std::optional<Int> {
        return p.homogeneous_degree(weights);
    };
    for (std::size_t i = 0; i < n_mid; ++i)
        for (std::size_t j = 0; j < n_src; ++j) {
            const Polynomial& p = inner.at(i, j);
            if (p.is_zero()) continue;
            auto d = degree_of(p);
            if (!d) throw std::invalid_argument(label + ": inner entry not homogeneous");
            edges.push_back({j, n_src + i, *d});  // src[j] - mid[i] = deg
        }
    for (std::size_t i = 0; i < n_tgt; ++i)
        for (std::size_t j = 0; j < n_mid; ++j) {
            const Polynomial& p = outer.at(i, j);
            if (p.is_zero()) continue;
            auto d = degree_of(p);
            if (!d) throw std::invalid_argument(label + ": outer entry not homogeneous");
            edges.push_back({n_src + j, n_src + n_mid + i, *d});  // mid[j] - tgt[i] = deg
        }

    // Propagate until stable; detect contradictions.
    for (std::size_t seed = 0; seed < total; ++seed) {
        if (known[seed]) continue;
        known[seed] = true;
        shift[seed] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Edge& e : edges) {
                if (known[e.hi] && known[e.lo]) {
                    if (shift[e.hi] - shift[e.lo] != e.deg)
                        throw std::invalid_argument(label + ": inconsistent grading shifts");
                } else if (known[e.hi] && !known[e.lo]) {
                    shift[e.lo] = shift[e.hi] - e.deg;
                    known[e.lo] = true;
                    changed = true;
                } else if (!known[e.hi] && known[e.lo]) {
                    shift[e.hi] = shift[e.lo] + e.deg;
                    known[e.hi] = true;
                    changed = true;
                }
            }
        }
    }

    ChainShifts out;
    out.source.assign(shift.begin(), shift.begin() + static_cast<std::ptrdiff_t>(n_src));
    out.middle.assign(shift.begin() + static_cast<std::ptrdiff_t>(n_src),
                      shift.begin() + static_cast<std::ptrdiff_t>(n_src + n_mid));
    out.target.assign(shift.begin() + static_cast<std::ptrdiff_t>(n_src + n_mid), shift.end());
    return out;
}

// Index of each standard monomial of the given degree.
struct PieceBasis {
    std::vector<Monomial> monomials;
    std::map<std::vector<int>, std::size_t> index;
};

PieceBasis piece_basis(const GroebnerBasis& gb, const Int& degree,
                       const std::vector<Int>& weights) {
    PieceBasis b;
    if (degree < 0) return b;
    b.monomials = graded_piece_basis(gb, degree, weights);
    for (std::size_t k = 0; k < b.monomials.size(); ++k) b.index[b.monomials[k].e] = k;
    return b;
}

// Exact matrix of the map block on degree-d pieces.
RatMatrix evaluate_block(const GradedMatrix& map, const std::vector<Int>& src_shift,
                         const std::vector<Int>& tgt_shift, const Int& degree,
                         const GroebnerBasis& gb, const std::vector<Int>& weights,
                         std::map<Int, PieceBasis>& cache) {
    auto piece = [&](const Int& deg) -> const PieceBasis& {
        auto it = cache.find(deg);
        if (it == cache.end()) it = cache.emplace(deg, piece_basis(gb, deg, weights)).first;
        return it->second;
    };

    std::vector<std::size_t> src_offset(map.cols + 1, 0), tgt_offset(map.rows + 1, 0);
    for (std::size_t j = 0; j < map.cols; ++j)
        src_offset[j + 1] = src_offset[j] + piece(degree - src_shift[j]).monomials.size();
    for (std::size_t i = 0; i < map.rows; ++i)
        tgt_offset[i + 1] = tgt_offset[i] + piece(degree - tgt_shift[i]).monomials.size();

    RatMatrix block(tgt_offset[map.rows], src_offset[map.cols]);
    for (std::size_t j = 0; j < map.cols; ++j) {
        const PieceBasis& src = piece(degree - src_shift[j]);
        for (std::size_t k = 0; k < src.monomials.size(); ++k) {
            for (std::size_t i = 0; i < map.rows; ++i) {
                const Polynomial& entry = map.at(i, j);
                if (entry.is_zero()) continue;
                Polynomial image = normal_form(
                    entry.multiplied_by(src.monomials[k], Rat(1)), gb);
                const PieceBasis& tgt = piece(degree - tgt_shift[i]);
                for (const auto& [mono, coef] : image.terms()) {
                    auto it = tgt.index.find(mono.e);
                    if (it == tgt.index.end())
                        throw std::logic_error("graded piece: image leaves the expected degree");
                    block(tgt_offset[i] + it->second, src_offset[j] + k) = coef;
                }
            }
        }
    }
    return block;
}

Polynomial nf_product_entry(const GradedMatrix& a, const GradedMatrix& b, std::size_t i,
                            std::size_t j, const GroebnerBasis& gb) {
    Polynomial acc = Polynomial::zero(gb.ring);
    for (std::size_t k = 0; k < a.cols; ++k) {
        const Polynomial& x = a.at(i, k);
        const Polynomial& y = b.at(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc = acc + x * y;
    }
    return normal_form(acc, gb);
}

}  // namespace

T1Report graded_subquotient_dim(const GradedMatrix& outer, const GradedMatrix& inner,
                                const SingularityPresentation& pres,
                                const SubquotientOptions& opt) {
    pres.validate();
    if (outer.cols != inner.rows)
        throw std::invalid_argument(pres.label + ": outer/inner shapes incompatible");
    GroebnerBasis gb = buchberger(pres.generators, pres.ring);

    T1Report rep;
    rep.method = "graded-subquotient";
    rep.stabilization_window = opt.window;

    // Pre-flight: the pair must be a complex modulo the ideal.
    for (std::size_t i = 0; i < outer.rows; ++i)
        for (std::size_t j = 0; j < inner.cols; ++j)
            if (!nf_product_entry(outer, inner, i, j, gb).is_zero()) {
                rep.status = T1Status::ComplexFailure;
                rep.note = "outer*inner does not vanish modulo the ideal";
                return rep;
            }

    ChainShifts shifts = infer_chain_shifts(outer, inner, pres.weights, pres.label);

    Int dmin = 0;
    bool have_min = false;
    auto consider = [&](const std::vector<Int>& v) {
        for (const Int& s : v) {
            if (!have_min || s < dmin) { dmin = s; have_min = true; }
        }
    };
    consider(shifts.source);
    consider(shifts.middle);
    consider(shifts.target);
    if (!have_min) {
        // No components anywhere: the zero complex.
        rep.total = 0;
        return rep;
    }

    std::map<Int, PieceBasis> cache;
    int zero_run = 0;
    bool stabilized = false;
    for (Int d = dmin; d <= opt.degree_bound; ++d) {
        std::size_t mid_dim = 0;
        for (const Int& s : shifts.middle)
            mid_dim += piece_basis(gb, d - s, pres.weights).monomials.size();

        RatMatrix outer_d = evaluate_block(outer, shifts.middle, shifts.target, d, gb,
                                           pres.weights, cache);
        RatMatrix inner_d = evaluate_block(inner, shifts.source, shifts.middle, d, gb,
                                           pres.weights, cache);
        Int contribution = Int(mid_dim) - Int(rat_rank(outer_d)) - Int(rat_rank(inner_d));
        if (contribution < 0)
            throw std::logic_error("graded subquotient: negative contribution");
        rep.per_degree.emplace_back(d, contribution);
        rep.total += contribution;
        if (contribution == 0) {
            if (++zero_run >= opt.window) stabilized = true;
        } else {
            zero_run = 0;
            stabilized = false;
        }
    }
    if (!stabilized) {
        rep.status = T1Status::NoStabilization;
        rep.note = "no trailing zero window of length " + std::to_string(opt.window) +
                   " below degree bound " + opt.degree_bound.str();
    }
    return rep;
}

std::vector<bool> verify_membership(const std::vector<std::vector<Polynomial>>& vectors,
                                    const GradedMatrix& matrix,
                                    const SingularityPresentation& pres) {
    GroebnerBasis gb = buchberger(pres.generators, pres.ring);
    std::vector<bool> out;
    for (const auto& v : vectors) {
        if (v.size() != matrix.cols)
            throw std::invalid_argument("verify_membership: vector length mismatch");
        bool in_kernel = true;
        for (std::size_t i = 0; i < matrix.rows && in_kernel; ++i) {
            Polynomial acc = Polynomial::zero(pres.ring);
            for (std::size_t j = 0; j < matrix.cols; ++j) {
                if (matrix.at(i, j).is_zero() || v[j].is_zero()) continue;
                acc = acc + matrix.at(i, j) * v[j];
            }
            if (!normal_form(acc, gb).is_zero()) in_kernel = false;
        }
        out.push_back(in_kernel);
    }
    return out;
}

ComplexReport verify_complex(const std::vector<GradedMatrix>& maps,
                             const SingularityPresentation& pres) {
    GroebnerBasis gb = buchberger(pres.generators, pres.ring);
    ComplexReport rep;
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        const GradedMatrix& first = maps[k];
        const GradedMatrix& second = maps[k + 1];
        if (second.cols != first.rows)
            throw std::invalid_argument("verify_complex: consecutive shapes incompatible");
        for (std::size_t i = 0; i < second.rows; ++i)
            for (std::size_t j = 0; j < first.cols; ++j) {
                Polynomial acc = Polynomial::zero(pres.ring);
                for (std::size_t t = 0; t < second.cols; ++t) {
                    if (second.at(i, t).is_zero() || first.at(t, j).is_zero()) continue;
                    acc = acc + second.at(i, t) * first.at(t, j);
                }
                Polynomial r = normal_form(acc, gb);
                if (!r.is_zero()) {
                    rep.ok = false;
                    rep.residues.push_back({k, i, j, r.to_string()});
                }
            }
    }
    return rep;
}

DeformationLedger local_to_global(const Int& h1_tangent, const Int& h2_tangent,
                                  const std::vector<Int>& local_t1,
                                  const std::vector<Int>& local_ext2) {
    DeformationLedger led;
    led.h1_tangent = h1_tangent;
    led.h2_tangent = h2_tangent;
    led.local_t1 = local_t1;
    led.local_ext2 = local_ext2;

    Int sum_t1 = 0;
    for (const Int& v : local_t1) sum_t1 += v;
    Int sum_ext2 = 0;
    for (const Int& v : local_ext2) sum_ext2 += v;

    // 0 -> H^1(T) -> Ext^1 -> H^0(local T^1) -> H^2(T): the connecting
    // map's kernel is pinned when H^2(T) = 0 or the middle term vanishes.
    if (h2_tangent == 0 || sum_t1 == 0) {
        led.ext1_lo = led.ext1_hi = h1_tangent + (h2_tangent == 0 ? sum_t1 : Int(0));
        led.ext1_exact = true;
    } else {
        Int slack = sum_t1 - h2_tangent;
        if (slack < 0) slack = 0;
        led.ext1_lo = h1_tangent + slack;
        led.ext1_hi = h1_tangent + sum_t1;
        led.ext1_exact = false;
    }

    // Ext^2 sources: H^2(T), H^0(local Ext^2); H^1(local T^1) = 0 on
    // zero-dimensional support.
    Int lo = h2_tangent - sum_t1;
    if (lo < 0) lo = 0;
    led.ext2_lo = lo;
    led.ext2_hi = h2_tangent + sum_ext2;
    led.ext2_exact = (led.ext2_lo == led.ext2_hi);
    return led;
}

}  // namespace toricdef
