#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bolza/group.hpp"

namespace bolza {

std::string word_str(const Word& w);           // letters A a B b C c D d
std::optional<Word> parse_word(const std::string& s);
Word word_inverse(const Word& w);
Word free_reduce(const Word& w);
std::array<int, 4> abelianize(const Word& w);

// Canonical form of an unoriented conjugacy class.
struct CyclicKey {
    Word word;  // minimal representative
    friend bool operator==(const CyclicKey&, const CyclicKey&) = default;
    friend auto operator<=>(const CyclicKey& a, const CyclicKey& b) { return a.word <=> b.word; }
};

struct CyclicKeyHash {
    size_t operator()(const CyclicKey& k) const;
};

// Dehn machinery for the octagon presentation, built from a discovered relator.
class WordSystem {
public:
    explicit WordSystem(Word relator);

    const Word& relator() const { return relator_; }

    // freely reduced and free of subwords longer than half the relator
    Word dehn_reduce(Word w) const;
    // additionally reduced around the cycle
    Word cyclic_dehn_reduce(Word w) const;

    // Canonical key of the unoriented conjugacy class.  Cyclic rotations,
    // inversion and half-relator swaps alone do not separate all classes of
    // this presentation, so the search also conjugates by single letters,
    // keeping words within `slack` of the running minimum length.
    CyclicKey conjugacy_key(const Word& w, int slack = 2) const;
    // Oriented variant (no inversion): used by the involution test.
    CyclicKey oriented_conjugacy_key(const Word& w, int slack = 2) const;

    // Fast prefilter invariant: closure under rotations, inversion and
    // half-relator swaps only.  Conjugates always share it after bucketing by
    // the full key; the enumeration uses it to avoid keying every candidate.
    Word closure_key(const Word& w, bool fold_inverse = true) const;
    // Even cheaper: minimum over rotations and inversion of the cyclically
    // reduced word, no relator moves.
    Word rotation_min_form(const Word& cyc_reduced, bool fold_inverse = true) const;

    // is the cyclic word a proper power?
    static bool is_primitive(const Word& cyclic_word);

    // All Dehn-reduced words of length in [1, max_len], deterministic order.
    std::vector<Word> enumerate_words(int max_len) const;

private:
    Word relator_;
    std::vector<Word> rotations_;           // relator and inverse, all rotations
    std::vector<int16_t> prefix5_;          // packed 5-letter prefix -> rotation index
    std::vector<std::pair<Word, Word>> half_swaps_;

    bool apply_one_rule(Word& w) const;
    CyclicKey key_impl(const Word& w, int slack, bool fold_inverse) const;
};

// The word system of the Bolza octagon group (relator discovered by search).
const WordSystem& bolza_words();

}  // namespace bolza
