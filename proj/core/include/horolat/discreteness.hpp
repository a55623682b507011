#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "horolat/horospherical.hpp"
#include "horolat/matrix.hpp"

namespace horolat {

/// Word over the generator alphabet: letter +k is generator k (1-based),
/// letter -k its inverse.
using Word = std::vector<std::int16_t>;

Word inverse_word(const Word& w);

struct GroupElement {
    GMatrix matrix;
    Word word;
};

struct EngineConfig {
    int max_word_len = 4;
    Rational eps2 = Rational(1, 1024);  // (1/16)^2 / 4
    int cascade_max = 8;                // 0 disables the cascade
    std::size_t element_cap = 1000000;
    std::size_t height_cap = 64;  // decimal digits per entry numerator/denominator

    /// sigma2 radius of the commutator-contraction ball, (1/16)^2.
    static const Rational& ball_sigma2();

    /// Enforces eps2 >= 0 and, when the cascade is enabled, eps2 inside the
    /// contraction ball. Throws std::invalid_argument.
    void validate() const;
};

struct EnumStats {
    std::size_t words_tried = 0;
    std::size_t elements = 0;
    std::size_t dup_hits = 0;
    std::size_t height_rejections = 0;
    bool element_cap_hit = false;
    int completed_word_len = 0;
};

/// Deduplicated set of exactly enumerated group elements; the identity is
/// always entry 0. Matrices are stored in canonical serialized form; two
/// elements are equal iff their matrices are entry-wise equal, words never
/// participate in equality.
class ElementStore {
  public:
    std::size_t size() const { return entries_.size(); }
    const std::string& key(std::size_t i) const { return entries_[i].key; }
    const Word& word(std::size_t i) const { return entries_[i].word; }
    GMatrix matrix(std::size_t i) const;
    GroupElement element(std::size_t i) const;
    bool contains(const std::string& key) const;
    const EnumStats& stats() const { return stats_; }

  private:
    struct Entry {
        std::string key;
        Word word;
    };
    // deque keeps key storage stable for the string_view index
    std::deque<Entry> entries_;
    std::unordered_map<std::string_view, std::uint32_t> index_;
    EnumStats stats_;

    friend ElementStore bfs_words(const std::vector<GMatrix>&, const EngineConfig&);
    bool insert(std::string key, Word word);
};

/// Breadth-first enumeration of all distinct products of words of length
/// <= cfg.max_word_len over the given base generators and their inverses.
/// The only word-level pruning is immediate inverse cancellation; all other
/// deduplication is by exact matrix equality. Shortest word is retained.
ElementStore bfs_words(const std::vector<GMatrix>& base_generators, const EngineConfig& cfg);

/// bfs_words over the 8 basis embeddings of the pair (f1 in U, f2 in Uminus).
ElementStore bfs_enumerate(const HoroLattice& f1, const HoroLattice& f2,
                           const EngineConfig& cfg);

struct ContractionResult {
    bool ok = false;
    Rational s_ab;  // sigma2 of the commutator
};

/// The explicit commutator contraction: for a, b with sigma2 < (1/16)^2,
/// sigma2([a,b]) < (1/4) * min(sigma2(a), sigma2(b)) (squared form; a
/// trivial commutator counts as contracting). Throws when an input is
/// outside the ball.
ContractionResult contraction_check(const GMatrix& a, const GMatrix& b);

enum class VerdictKind {
    NoShortElements,
    ShortElementFound,
    IndiscretenessEvidence,
    Inconclusive,
};

const char* verdict_name(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<GroupElement> witness;
    std::optional<Rational> witness_frob2;
    std::optional<Rational> min_nontrivial_frob2;
    std::optional<Rational> certified_bound;  // (1/16)^2 / 4^k
    EnumStats stats;
    std::vector<std::size_t> cascade_profile;  // survivors per cascade depth
    std::string note;
};

/// Minimal-norm nontrivial element below eps2, if any. Ties broken by
/// (frob2, word length, lexicographic word).
Verdict short_element_search(const ElementStore& store, const EngineConfig& cfg);

/// Iterates W_0 = seeds, W_{i+1} = {[s,t] : s in seeds, t in W_i}, keeping
/// nontrivial deduplicated elements. Every seed must satisfy
/// sigma2 < (1/16)^2 and at least two seeds are required. Surviving to
/// depth k = cascade_max certifies a nontrivial element with
/// sigma2 < (1/16)^2 / 4^k; if all chains die the verdict is Inconclusive
/// with the depth profile. The per-level contraction is asserted exactly.
Verdict commutator_cascade(const std::vector<GroupElement>& seeds, const EngineConfig& cfg);

/// Full pipeline: enumerate, search, and when short elements inside the
/// contraction ball exist, run the cascade on them. Height-cap rejections
/// downgrade a negative search to Inconclusive, never to a wrong verdict.
Verdict run_engine(const HoroLattice& f1, const HoroLattice& f2, const EngineConfig& cfg);

/// Element diag(s^-2, s, s) (shape OneTwo; diag(s, s, s^-2) for TwoOne) of
/// the centralizer of the Levi commutator. Conjugation by it scales U
/// entries by s^-3 and Uminus entries by s^3 (mirrored for TwoOne), which
/// shrinks U-side elements into the contraction ball for s > 1.
GMatrix centralizer_element(const Rational& s, PairShape shape);
GMatrix shrink_conjugate(const GMatrix& m, const Rational& s, PairShape shape);

}  // namespace horolat
