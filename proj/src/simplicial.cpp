#include "agr/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace agr {

namespace {

using Mask = std::uint32_t;

constexpr int kMaxVertices = 20;

/// All faces of a complex given by facet masks, bucketed by cardinality;
/// bucket 0 holds the empty face. Valid for links as well, including the
/// {empty} complex (a single empty bucket-0 face).
struct FaceSet {
    std::vector<std::vector<Mask>> by_card;

    int dim() const { return static_cast<int>(by_card.size()) - 2; }
    Int count(int card) const {
        return card < static_cast<int>(by_card.size())
                   ? static_cast<Int>(by_card[static_cast<size_t>(card)].size())
                   : 0;
    }
};

FaceSet faces_of(const std::vector<Mask>& facets) {
    std::set<Mask> all;
    for (Mask f : facets) {
        Mask sub = f;
        for (;;) {
            all.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    all.insert(0);
    FaceSet fs;
    for (Mask m : all) {
        int c = std::popcount(m);
        if (c >= static_cast<int>(fs.by_card.size())) fs.by_card.resize(static_cast<size_t>(c) + 1);
        fs.by_card[static_cast<size_t>(c)].push_back(m);
    }
    for (auto& bucket : fs.by_card) std::sort(bucket.begin(), bucket.end());
    return fs;
}

int row_index(const std::vector<Mask>& bucket, Mask m) {
    return static_cast<int>(std::lower_bound(bucket.begin(), bucket.end(), m) - bucket.begin());
}

/// Boundary matrix from (k)-cardinality+1 faces to k-cardinality faces,
/// rows indexed by the smaller faces.
std::vector<std::vector<Int>> boundary_matrix(const FaceSet& fs, int card) {
    const auto& cols = fs.by_card[static_cast<size_t>(card)];
    const auto& rows = fs.by_card[static_cast<size_t>(card) - 1];
    std::vector<std::vector<Int>> m(rows.size(), std::vector<Int>(cols.size(), 0));
    for (size_t j = 0; j < cols.size(); ++j) {
        Mask face = cols[j];
        int sign = 1;
        Mask rest = face;
        while (rest) {
            Mask low = rest & (~rest + 1);
            m[static_cast<size_t>(row_index(rows, face ^ low))][j] = sign;
            sign = -sign;
            rest ^= low;
        }
    }
    return m;
}

/// Fraction-free (Bareiss) rank over the rationals; entries stay exact
/// minors of the input. Throws when a minor leaves 64-bit range.
int rank_fraction_free(std::vector<std::vector<Int>> a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0 || a[0].empty()) return 0;
    const int cols = static_cast<int>(a[0].size());
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(piv)]);
        const auto& prow = a[static_cast<size_t>(rank)];
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = a[static_cast<size_t>(r)];
            for (int c = col + 1; c < cols; ++c) {
                __int128 num = static_cast<__int128>(prow[static_cast<size_t>(col)]) * row[static_cast<size_t>(c)]
                             - static_cast<__int128>(row[static_cast<size_t>(col)]) * prow[static_cast<size_t>(c)];
                __int128 q = num / prev; // exact by Bareiss
                if (q > INT64_MAX || q < INT64_MIN)
                    throw input_error("homology: exact minors exceed 64-bit range");
                row[static_cast<size_t>(c)] = static_cast<Int>(q);
            }
            row[static_cast<size_t>(col)] = 0;
        }
        prev = prow[static_cast<size_t>(col)];
        ++rank;
    }
    return rank;
}

int rank_mod_p(std::vector<std::vector<Int>> a, int p) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0 || a[0].empty()) return 0;
    const int cols = static_cast<int>(a[0].size());
    auto norm = [&](Int x) { return ((x % p) + p) % p; };
    for (auto& row : a)
        for (auto& x : row) x = norm(x);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(piv)]);
        // scale pivot row to 1 via Fermat inverse
        Int inv = 1, base = a[static_cast<size_t>(rank)][static_cast<size_t>(col)], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int c = col; c < cols; ++c)
            a[static_cast<size_t>(rank)][static_cast<size_t>(c)] =
                a[static_cast<size_t>(rank)][static_cast<size_t>(c)] * inv % p;
        for (int r = rank + 1; r < rows; ++r) {
            Int factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    norm(a[static_cast<size_t>(r)][static_cast<size_t>(c)]
                         - factor * a[static_cast<size_t>(rank)][static_cast<size_t>(c)]);
        }
        ++rank;
    }
    return rank;
}

int matrix_rank(const std::vector<std::vector<Int>>& m, const Field& k) {
    return k.is_rationals() ? rank_fraction_free(m) : rank_mod_p(m, k.characteristic());
}

/// Reduced Betti numbers (beta_{-1} .. beta_dim) of a face set.
std::vector<Int> betti_numbers(const FaceSet& fs, const Field& k) {
    const int dim = fs.dim();
    std::vector<int> ranks(static_cast<size_t>(dim) + 2, 0); // ranks[c] = rank of d: card c -> card c-1
    for (int card = 1; card <= dim + 1; ++card)
        ranks[static_cast<size_t>(card)] = matrix_rank(boundary_matrix(fs, card), k);
    std::vector<Int> betti;
    for (int i = -1; i <= dim; ++i) {
        Int b = fs.count(i + 1) - ranks[static_cast<size_t>(i + 1)]
              - (i + 2 <= dim + 1 ? ranks[static_cast<size_t>(i + 2)] : 0);
        betti.push_back(b);
    }
    return betti;
}

std::vector<Mask> link_facets(const std::vector<Mask>& facets, Mask sigma) {
    std::vector<Mask> out;
    for (Mask f : facets)
        if ((f & sigma) == sigma) out.push_back(f & ~sigma);
    return out;
}

/// Reisner vanishing below the link dimension, over every face.
bool reisner_holds(const std::vector<Mask>& facets, const Field& k) {
    auto faces = faces_of(facets);
    for (const auto& bucket : faces.by_card) {
        for (Mask sigma : bucket) {
            auto link = faces_of(link_facets(facets, sigma));
            auto betti = betti_numbers(link, k);
            for (int i = -1; i < link.dim(); ++i)
                if (betti[static_cast<size_t>(i + 1)] != 0) return false;
        }
    }
    return true;
}

bool sphere_links(const std::vector<Mask>& facets, const Field& k) {
    auto faces = faces_of(facets);
    for (const auto& bucket : faces.by_card) {
        for (Mask sigma : bucket) {
            auto link = faces_of(link_facets(facets, sigma));
            auto betti = betti_numbers(link, k);
            for (int i = -1; i < link.dim(); ++i)
                if (betti[static_cast<size_t>(i + 1)] != 0) return false;
            if (betti.back() != 1) return false;
        }
    }
    return true;
}

std::string facet_string(const SimplicialComplex& c) {
    std::string s = "n=" + std::to_string(c.n_vertices()) + ";";
    for (const auto& f : c.facets()) {
        s += '[';
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(f[i]);
        }
        s += ']';
    }
    return s;
}

} // namespace

Field Field::prime(int p) {
    if (p < 2) throw not_prime("field characteristic must be a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw not_prime(std::to_string(p) + " is not prime");
    return Field(p);
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& raw) {
    if (n < 1) throw input_error("complex: vertex count must be positive");
    if (n > kMaxVertices) throw input_error("complex: exact engine capped at 20 vertices");
    if (raw.empty()) throw empty_complex("complex: no facets given");

    std::vector<Mask> masks;
    for (const auto& facet : raw) {
        if (facet.empty()) throw empty_complex("complex: empty facet");
        Mask m = 0;
        for (int v : facet) {
            if (v < 1 || v > n) throw vertex_out_of_range("complex: vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            m |= Mask{1} << (v - 1);
        }
        masks.push_back(m);
    }

    Mask covered = 0;
    for (Mask m : masks) covered |= m;
    if (covered != (n == 32 ? ~Mask{0} : (Mask{1} << n) - 1)) {
        for (int v = 1; v <= n; ++v)
            if (!(covered >> (v - 1) & 1u))
                throw ghost_vertex("complex: vertex " + std::to_string(v) + " lies in no facet");
    }

    // keep maximal faces only
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> maximal;
    for (Mask m : masks) {
        bool contained = false;
        for (Mask other : masks)
            if (other != m && (other & m) == m) { contained = true; break; }
        if (!contained) maximal.push_back(m);
    }

    SimplicialComplex c;
    c.n_ = n;
    for (Mask m : maximal) {
        std::vector<int> facet;
        for (int v = 1; v <= n; ++v)
            if (m >> (v - 1) & 1u) facet.push_back(v);
        c.dim_ = std::max(c.dim_, static_cast<int>(facet.size()) - 1);
        c.facets_.push_back(std::move(facet));
    }
    std::sort(c.facets_.begin(), c.facets_.end());
    c.masks_.clear();
    for (const auto& f : c.facets_) {
        Mask m = 0;
        for (int v : f) m |= Mask{1} << (v - 1);
        c.masks_.push_back(m);
    }
    c.pure_ = std::all_of(c.facets_.begin(), c.facets_.end(), [&](const auto& f) {
        return static_cast<int>(f.size()) == c.dim_ + 1;
    });
    return c;
}

std::vector<Int> SimplicialComplex::f_vector() const {
    auto faces = faces_of(masks_);
    std::vector<Int> f;
    for (int card = 0; card <= dim_ + 1; ++card) f.push_back(faces.count(card));
    return f;
}

Int HilbertNumerator::multiplicity() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), Int{0});
}

HilbertNumerator h_vector(const SimplicialComplex& c) {
    const Int d = c.dim() + 1;
    auto f = c.f_vector(); // f[i] = f_{i-1}
    std::vector<Int> h(static_cast<size_t>(d) + 1, 0);
    for (Int i = 0; i <= d; ++i) {
        // f_{i-1} * lambda^i * (1 - lambda)^{d-i}
        Int binom = 1;
        for (Int j = 0; j <= d - i; ++j) {
            h[static_cast<size_t>(i + j)] += (j % 2 ? -1 : 1) * binom * f[static_cast<size_t>(i)];
            binom = binom * (d - i - j) / (j + 1);
        }
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    HilbertNumerator num{std::move(h), d};
    if (num.coeffs.front() != 1)
        throw internal_error("h-vector does not start at 1");
    Int top = 0;
    for (const auto& facet : c.facets())
        if (static_cast<Int>(facet.size()) == d) ++top;
    if (num.multiplicity() != top)
        throw internal_error("h-vector sum disagrees with the top-dimensional facet count");
    return num;
}

std::vector<Int> homology_ranks(const SimplicialComplex& c, const Field& k) {
    return betti_numbers(faces_of(c.facet_masks()), k);
}

bool is_cohen_macaulay(const SimplicialComplex& c, const Field& k) {
    return reisner_holds(c.facet_masks(), k);
}

bool is_gorenstein_sr(const SimplicialComplex& c, const Field& k) {
    // core: delete the vertices shared by every facet (cone points)
    Mask shared = ~Mask{0};
    for (Mask f : c.facet_masks()) shared &= f;
    std::vector<Mask> core;
    for (Mask f : c.facet_masks()) core.push_back(f & ~shared);
    if (std::all_of(core.begin(), core.end(), [](Mask m) { return m == 0; }))
        return true; // the complex is a full simplex: polynomial ring
    std::sort(core.begin(), core.end());
    core.erase(std::unique(core.begin(), core.end()), core.end());
    return sphere_links(core, k);
}

ClassificationReport classify_sr(const SimplicialComplex& c, const Field& k) {
    auto h = h_vector(c);
    const Int d = h.krull_dim;

    ClassificationReport r;
    r.kind = RingClass::StanleyReisner;
    r.input = facet_string(c);
    r.krull_dim = d;
    r.multiplicity = h.multiplicity();
    r.embedding_dim = c.n_vertices();
    r.notes.push_back("field " + k.name());
    r.notes.push_back("Q(R) Gorenstein holds automatically: Stanley-Reisner rings are reduced");

    const bool cm = is_cohen_macaulay(c, k);
    r.cohen_macaulay = tri(cm);
    if (!cm) {
        r.notes.push_back("Reisner criterion failed over " + k.name() + ": ring flags left unknown");
        validate(r);
        return r;
    }

    const Int a = h.a_invariant();
    r.a_invariant = a;

    // Vertex-count identity: n = e + d - 1 holds exactly when deg h <= 1
    // (degree 0 being the full simplex, a polynomial ring with a = -d).
    const bool count_identity = c.n_vertices() == r.multiplicity + d - 1;
    if (count_identity != (h.degree() <= 1))
        throw internal_error("vertex count identity disagrees with deg h on " + r.input);

    if (a == 1 - d) {
        const Int h1 = h.coeffs[1];
        if (static_cast<Int>(c.n_vertices()) - d != h1)
            throw internal_error("level numerator shape violated on " + r.input);
        r.almost_gorenstein = TriState::True;
        r.level = TriState::True;
        r.cm_type = std::max<Int>(h1, 1);
        r.gorenstein = tri(h1 <= 1);
        r.pseudo_gorenstein = tri(*r.cm_type <= 2);
        r.notes.push_back("a = 1 - d: almost Gorenstein graded level ring, type h_1 = " + std::to_string(h1));
    } else {
        const bool g = is_gorenstein_sr(c, k);
        r.gorenstein = tri(g);
        r.almost_gorenstein = tri(g); // a != 1-d: almost Gorenstein iff Gorenstein
        r.pseudo_gorenstein = tri(g);
        if (g) r.cm_type = 1;
        r.notes.push_back(g ? "a != 1 - d and core links are spheres: Gorenstein"
                            : "a != 1 - d and not Gorenstein: not almost Gorenstein graded");
    }

    validate(r);
    return r;
}

} // namespace agr
