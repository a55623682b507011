#include "horolat/discreteness.hpp"

#include <algorithm>
#include <stdexcept>

namespace horolat {

namespace {

// Breadth cap for cascade levels and for the seed list the engine hands to
// the cascade; a capped search can only miss evidence, never invent it.
constexpr std::size_t kCascadeWidth = 24;
constexpr std::size_t kCascadeSeeds = 16;

}  // namespace

Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& l : r) l = static_cast<std::int16_t>(-l);
    return r;
}

const Rational& EngineConfig::ball_sigma2() {
    static const Rational c2(1, 256);  // (1/16)^2
    return c2;
}

void EngineConfig::validate() const {
    if (max_word_len < 1) throw std::invalid_argument("config: max_word_len must be >= 1");
    if (sgn(eps2) < 0) throw std::invalid_argument("config: eps2 must be >= 0");
    if (cascade_max < 0) throw std::invalid_argument("config: cascade_max must be >= 0");
    if (element_cap < 1) throw std::invalid_argument("config: element_cap must be >= 1");
    if (height_cap < 1) throw std::invalid_argument("config: height_cap must be >= 1");
    if (cascade_max > 0 && eps2 > ball_sigma2())
        throw std::invalid_argument(
            "config: with the cascade enabled eps2 must be <= (1/16)^2");
}

GMatrix ElementStore::matrix(std::size_t i) const { return gmatrix_from_key(entries_[i].key); }

GroupElement ElementStore::element(std::size_t i) const {
    return GroupElement{matrix(i), entries_[i].word};
}

bool ElementStore::contains(const std::string& key) const {
    return index_.find(std::string_view(key)) != index_.end();
}

bool ElementStore::insert(std::string key, Word word) {
    if (contains(key)) return false;
    entries_.push_back(Entry{std::move(key), std::move(word)});
    const Entry& e = entries_.back();
    index_.emplace(std::string_view(e.key), static_cast<std::uint32_t>(entries_.size() - 1));
    return true;
}

ElementStore bfs_words(const std::vector<GMatrix>& base_generators, const EngineConfig& cfg) {
    cfg.validate();
    const int m = static_cast<int>(base_generators.size());
    int dim = m > 0 ? base_generators[0].dim() : 3;

    std::vector<GMatrix> by_letter;  // letters +1..+m then -1..-m
    for (const GMatrix& g : base_generators) {
        if (g.dim() != dim) throw std::invalid_argument("bfs: generator dimension mismatch");
        by_letter.push_back(g);
    }
    for (const GMatrix& g : base_generators) by_letter.push_back(g.inverse());
    auto gen = [&](std::int16_t letter) -> const GMatrix& {
        return letter > 0 ? by_letter[letter - 1] : by_letter[m - letter - 1];
    };
    std::vector<std::int16_t> letters;
    for (int k = 1; k <= m; ++k) letters.push_back(static_cast<std::int16_t>(k));
    for (int k = 1; k <= m; ++k) letters.push_back(static_cast<std::int16_t>(-k));

    ElementStore store;
    store.insert(GMatrix::identity(dim).key(), Word{});
    std::vector<std::uint32_t> frontier{0};

    for (int len = 1; len <= cfg.max_word_len && !frontier.empty(); ++len) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t idx : frontier) {
            GMatrix parent = store.matrix(idx);
            const Word& pword = store.word(idx);
            std::int16_t last = pword.empty() ? 0 : pword.back();
            for (std::int16_t letter : letters) {
                if (letter == -last && last != 0) continue;  // g g^-1 pruning
                ++store.stats_.words_tried;
                GMatrix prod = parent * gen(letter);
                if (prod.height() > cfg.height_cap) {
                    ++store.stats_.height_rejections;
                    continue;
                }
                std::string key = prod.key();
                if (store.contains(key)) {
                    ++store.stats_.dup_hits;
                    continue;
                }
                if (store.size() >= cfg.element_cap) {
                    store.stats_.element_cap_hit = true;
                    store.stats_.elements = store.size();
                    return store;
                }
                Word w = pword;
                w.push_back(letter);
                store.insert(std::move(key), std::move(w));
                next.push_back(static_cast<std::uint32_t>(store.size() - 1));
            }
        }
        frontier = std::move(next);
        store.stats_.completed_word_len = len;
    }
    store.stats_.elements = store.size();
    return store;
}

ElementStore bfs_enumerate(const HoroLattice& f1, const HoroLattice& f2,
                           const EngineConfig& cfg) {
    if (f1.side().tag != HoroTag::U || f2.side().tag != HoroTag::Uminus ||
        f1.side().shape != f2.side().shape)
        throw std::invalid_argument("bfs_enumerate: need a U / Uminus pair of one shape");
    std::vector<GMatrix> base;
    for (const Complex2& v : f1.basis()) base.push_back(embed_u(v, f1.side()));
    for (const Complex2& v : f2.basis()) base.push_back(embed_u(v, f2.side()));
    return bfs_words(base, cfg);
}

ContractionResult contraction_check(const GMatrix& a, const GMatrix& b) {
    Rational sa = sigma2(a), sb = sigma2(b);
    const Rational& c2 = EngineConfig::ball_sigma2();
    if (sa >= c2 || sb >= c2)
        throw std::invalid_argument("contraction_check: input outside the sigma2 < (1/16)^2 ball");
    Rational s_ab = sigma2(commutator(a, b));
    Rational quarter_min = (sa <= sb ? sa : sb) / 4;
    bool ok = sgn(s_ab) == 0 || s_ab < quarter_min;
    return ContractionResult{ok, s_ab};
}

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::NoShortElements: return "NoShortElements";
        case VerdictKind::ShortElementFound: return "ShortElementFound";
        case VerdictKind::IndiscretenessEvidence: return "IndiscretenessEvidence";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct BallElement {
    GroupElement el;
    Rational sig2;
};

// One pass over the store: minimal nontrivial frob2 (with the deterministic
// tie-break) and, when requested, the elements inside the contraction ball.
struct SearchScan {
    std::optional<std::size_t> best_idx;
    Rational best_frob2;
    std::optional<Rational> min_frob2;
    std::vector<BallElement> ball;
};

SearchScan scan_store(const ElementStore& store, bool collect_ball) {
    SearchScan out;
    const Rational& c2 = EngineConfig::ball_sigma2();
    for (std::size_t i = 0; i < store.size(); ++i) {
        GMatrix m = store.matrix(i);
        Rational f = frob2(m);
        if (sgn(f) == 0) continue;  // identity
        if (!out.min_frob2 || f < *out.min_frob2) out.min_frob2 = f;
        if (!out.best_idx || f < out.best_frob2 ||
            (f == out.best_frob2 && word_less(store.word(i), store.word(*out.best_idx)))) {
            out.best_idx = i;
            out.best_frob2 = f;
        }
        if (collect_ball && f < c2) {
            Rational s2 = sigma2(m);
            if (s2 < c2) out.ball.push_back(BallElement{GroupElement{m, store.word(i)}, s2});
        }
    }
    return out;
}

}  // namespace

Verdict short_element_search(const ElementStore& store, const EngineConfig& cfg) {
    SearchScan scan = scan_store(store, false);
    Verdict v;
    v.stats = store.stats();
    v.stats.elements = store.size();
    v.min_nontrivial_frob2 = scan.min_frob2;
    if (scan.best_idx && scan.best_frob2 < cfg.eps2) {
        v.kind = VerdictKind::ShortElementFound;
        v.witness = store.element(*scan.best_idx);
        v.witness_frob2 = scan.best_frob2;
    } else {
        v.kind = VerdictKind::NoShortElements;
        v.note = (v.stats.element_cap_hit || v.stats.height_rejections > 0)
                     ? "truncated enumeration"
                     : "exhaustive up to max_word_len";
    }
    return v;
}

Verdict commutator_cascade(const std::vector<GroupElement>& seeds, const EngineConfig& cfg) {
    cfg.validate();
    if (seeds.size() < 2)
        throw std::invalid_argument("cascade: need at least 2 seeds");
    const Rational& c2 = EngineConfig::ball_sigma2();

    std::vector<BallElement> w0;
    for (const GroupElement& s : seeds) {
        Rational s2 = sigma2(s.matrix);
        if (s2 >= c2)
            throw std::invalid_argument("cascade: seed outside the sigma2 < (1/16)^2 ball");
        w0.push_back(BallElement{s, s2});
    }

    Verdict v;
    v.cascade_profile.push_back(w0.size());
    std::vector<BallElement> level = w0;

    for (int depth = 1; depth <= cfg.cascade_max; ++depth) {
        std::vector<BallElement> next;
        std::vector<std::string> seen;
        for (const BallElement& s : w0) {
            for (const BallElement& t : level) {
                GMatrix c = commutator(s.el.matrix, t.el.matrix);
                if (c.is_identity()) continue;
                if (c.height() > cfg.height_cap) {
                    v.kind = VerdictKind::Inconclusive;
                    v.note = "height cap exceeded at cascade depth " + std::to_string(depth);
                    return v;
                }
                std::string key = c.key();
                if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
                seen.push_back(key);
                Rational sc = sigma2(c);
                Rational quarter_min = (s.sig2 <= t.sig2 ? s.sig2 : t.sig2) / 4;
                if (sc >= quarter_min)
                    throw std::logic_error("cascade: contraction step failed");
                Word w = s.el.word;
                w.insert(w.end(), t.el.word.begin(), t.el.word.end());
                Word iw = inverse_word(s.el.word);
                w.insert(w.end(), iw.begin(), iw.end());
                iw = inverse_word(t.el.word);
                w.insert(w.end(), iw.begin(), iw.end());
                next.push_back(BallElement{GroupElement{std::move(c), std::move(w)}, sc});
            }
        }
        if (next.empty()) {
            v.kind = VerdictKind::Inconclusive;
            v.note = "all commutator chains died at depth " + std::to_string(depth);
            return v;
        }
        std::sort(next.begin(), next.end(), [](const BallElement& a, const BallElement& b) {
            if (a.sig2 != b.sig2) return a.sig2 < b.sig2;
            return a.el.matrix.key() < b.el.matrix.key();
        });
        if (next.size() > kCascadeWidth) next.resize(kCascadeWidth);
        level = std::move(next);
        v.cascade_profile.push_back(level.size());
    }

    v.kind = VerdictKind::IndiscretenessEvidence;
    v.witness = level.front().el;
    v.witness_frob2 = frob2(level.front().el.matrix);
    Integer pow4(1);
    mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(cfg.cascade_max));
    v.certified_bound = c2 / Rational(pow4);
    return v;
}

Verdict run_engine(const HoroLattice& f1, const HoroLattice& f2, const EngineConfig& cfg) {
    cfg.validate();
    ElementStore store = bfs_enumerate(f1, f2, cfg);
    SearchScan scan = scan_store(store, cfg.cascade_max > 0);

    Verdict v;
    v.stats = store.stats();
    v.stats.elements = store.size();
    v.min_nontrivial_frob2 = scan.min_frob2;

    if (scan.best_idx && scan.best_frob2 < cfg.eps2) {
        v.kind = VerdictKind::ShortElementFound;
        v.witness = store.element(*scan.best_idx);
        v.witness_frob2 = scan.best_frob2;
        if (cfg.cascade_max > 0 && scan.ball.size() >= 2) {
            std::sort(scan.ball.begin(), scan.ball.end(),
                      [](const BallElement& a, const BallElement& b) {
                          if (a.sig2 != b.sig2) return a.sig2 < b.sig2;
                          return a.el.matrix.key() < b.el.matrix.key();
                      });
            if (scan.ball.size() > kCascadeSeeds) scan.ball.resize(kCascadeSeeds);
            std::vector<GroupElement> seeds;
            for (const BallElement& b : scan.ball) seeds.push_back(b.el);
            Verdict cas = commutator_cascade(seeds, cfg);
            if (cas.kind == VerdictKind::IndiscretenessEvidence) {
                cas.stats = v.stats;
                cas.min_nontrivial_frob2 = v.min_nontrivial_frob2;
                return cas;
            }
            v.cascade_profile = cas.cascade_profile;
            v.note = cas.note;
        }
        return v;
    }

    if (v.stats.height_rejections > 0) {
        v.kind = VerdictKind::Inconclusive;
        v.note = "height cap rejected elements; absence of short elements not established";
    } else {
        v.kind = VerdictKind::NoShortElements;
        v.note = v.stats.element_cap_hit ? "truncated enumeration"
                                         : "exhaustive up to max_word_len";
    }
    return v;
}

GMatrix centralizer_element(const Rational& s, PairShape shape) {
    if (sgn(s) == 0) throw std::invalid_argument("centralizer_element: s must be nonzero");
    Rational s_inv2 = Rational(1) / (s * s);
    GMatrix z = GMatrix::identity(3);
    if (shape == PairShape::OneTwo) {
        z.at(0, 0) = GaussianRational(s_inv2);
        z.at(1, 1) = GaussianRational(s);
        z.at(2, 2) = GaussianRational(s);
    } else {
        z.at(0, 0) = GaussianRational(s);
        z.at(1, 1) = GaussianRational(s);
        z.at(2, 2) = GaussianRational(s_inv2);
    }
    return z;
}

GMatrix shrink_conjugate(const GMatrix& m, const Rational& s, PairShape shape) {
    GMatrix z = centralizer_element(s, shape);
    return z * m * z.inverse();
}

}  // namespace horolat
