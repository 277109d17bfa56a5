#include "bolza/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bolza {

namespace {
constexpr char kLetterChars[] = "AaBbCcDd";

inline uint16_t pack5(const Letter* p) {
    return uint16_t(p[0] | (p[1] << 3) | (p[2] << 6) | (p[3] << 9) | (p[4] << 12));
}
}  // namespace

std::string word_str(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter c : w) s.push_back(kLetterChars[c]);
    return s;
}

std::optional<Word> parse_word(const std::string& s) {
    Word w;
    for (char ch : s) {
        const char* p = std::char_traits<char>::find(kLetterChars, 8, ch);
        if (!p) return std::nullopt;
        w.push_back(Letter(p - kLetterChars));
    }
    return w;
}

Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inverse(*it));
    return out;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter c : w) {
        if (!out.empty() && out.back() == letter_inverse(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

std::array<int, 4> abelianize(const Word& w) {
    std::array<int, 4> v{0, 0, 0, 0};
    for (Letter c : w) v[c >> 1] += (c & 1) ? -1 : 1;
    return v;
}

size_t CyclicKeyHash::operator()(const CyclicKey& k) const {
    size_t h = 1469598103934665603ull;
    for (Letter c : k.word) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

WordSystem::WordSystem(Word relator) : relator_(std::move(relator)) {
    if (relator_.size() != 8) throw std::invalid_argument("WordSystem: relator length != 8");
    std::set<Word> rots;
    Word rinv = word_inverse(relator_);
    for (const Word& base : {relator_, rinv}) {
        for (int r = 0; r < 8; ++r) {
            Word rot(base.begin() + r, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + r);
            rots.insert(rot);
        }
    }
    rotations_.assign(rots.begin(), rots.end());
    prefix5_.assign(1 << 15, -1);
    for (size_t i = 0; i < rotations_.size(); ++i) {
        uint16_t key = pack5(rotations_[i].data());
        prefix5_[key] = int16_t(i);  // 5-prefixes of distinct rotations are distinct
    }
    for (const Word& rot : rotations_) {
        Word half(rot.begin(), rot.begin() + 4);
        half_swaps_.emplace_back(std::move(half), word_inverse(Word(rot.begin() + 4, rot.end())));
    }
}

// Replace the leftmost longest subword that covers more than half of a
// relator rotation.  Any such subword of length >= 5 starts with the 5-letter
// prefix of exactly one rotation, so a rolling window finds candidates.
bool WordSystem::apply_one_rule(Word& w) const {
    size_t n = w.size();
    if (n < 5) return false;
    size_t best_i = 0, best_len = 0;
    int best_rot = -1;
    for (size_t i = 0; i + 5 <= n; ++i) {
        int16_t r = prefix5_[pack5(w.data() + i)];
        if (r < 0) continue;
        const Word& rot = rotations_[r];
        size_t len = 5;
        while (len < 8 && i + len < n && w[i + len] == rot[len]) ++len;
        if (len > best_len) {
            best_len = len;
            best_i = i;
            best_rot = r;
        }
    }
    if (best_rot < 0) return false;
    const Word& rot = rotations_[best_rot];
    Word next(w.begin(), w.begin() + best_i);
    for (size_t k = 8; k > best_len; --k) next.push_back(letter_inverse(rot[k - 1]));
    next.insert(next.end(), w.begin() + best_i + best_len, w.end());
    w = free_reduce(next);
    return true;
}

Word WordSystem::dehn_reduce(Word w) const {
    w = free_reduce(std::move(w));
    while (apply_one_rule(w)) {
    }
    return w;
}

Word WordSystem::cyclic_dehn_reduce(Word w) const {
    w = dehn_reduce(std::move(w));
    for (;;) {
        size_t n = w.size();
        if (n == 0) return w;
        if (w.front() == letter_inverse(w.back())) {
            w = dehn_reduce(Word(w.begin() + 1, w.end() - 1));
            continue;
        }
        if (n < 5) return w;
        // rules across the wrap
        Word dd = w;
        dd.insert(dd.end(), w.begin(), w.begin() + std::min<size_t>(7, n));
        bool hit = false;
        for (size_t i = n >= 5 ? n - 4 : 0; i + 5 <= dd.size() && i < n; ++i) {
            int16_t r = prefix5_[pack5(dd.data() + i)];
            if (r < 0) continue;
            const Word& rot = rotations_[r];
            size_t len = 5;
            while (len < 8 && i + len < dd.size() && dd[i + len] == rot[len]) ++len;
            // rotate w so the match starts at position 0, then rewrite
            Word rotw(w.begin() + i, w.end());
            rotw.insert(rotw.end(), w.begin(), w.begin() + i);
            Word next;
            for (size_t k = 8; k > len; --k) next.push_back(letter_inverse(rot[k - 1]));
            next.insert(next.end(), rotw.begin() + len, rotw.end());
            w = dehn_reduce(free_reduce(next));
            hit = true;
            break;
        }
        if (!hit) return w;
    }
}

namespace {
Word min_rotation_form(const Word& u, bool fold_inverse) {
    size_t n = u.size();
    Word best = u;
    Word dd = u;
    dd.insert(dd.end(), u.begin(), u.end());
    for (size_t r = 1; r < n; ++r) {
        Word f(dd.begin() + r, dd.begin() + r + n);
        if (f < best) best = f;
    }
    if (fold_inverse) {
        Word vi = word_inverse(u);
        Word di = vi;
        di.insert(di.end(), vi.begin(), vi.end());
        for (size_t r = 0; r < n; ++r) {
            Word f(di.begin() + r, di.begin() + r + n);
            if (f < best) best = f;
        }
    }
    return best;
}
}  // namespace

Word WordSystem::rotation_min_form(const Word& cyc_reduced, bool fold_inverse) const {
    if (cyc_reduced.empty()) return cyc_reduced;
    return min_rotation_form(cyc_reduced, fold_inverse);
}

Word WordSystem::closure_key(const Word& w0, bool fold_inverse) const {
    // cheap invariant-ish key: closure under rotations, inversion and
    // half-relator swaps; a fast prefilter that may still split classes
    Word w = cyclic_dehn_reduce(w0);
    if (w.empty()) return w;
    std::set<Word> seen;
    std::vector<Word> stack{w};
    Word best = min_rotation_form(w, fold_inverse);
    while (!stack.empty()) {
        Word u = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(u).second) continue;
        Word m = min_rotation_form(u, fold_inverse);
        if (m < best) best = m;
        size_t n = u.size();
        if (n < 4) continue;
        Word dd = u;
        dd.insert(dd.end(), u.begin(), u.begin() + std::min<size_t>(3, n));
        for (const auto& [from, to] : half_swaps_) {
            if (n + 3 < 4) continue;
            for (size_t i = 0; i < n; ++i) {
                if (i + 4 > dd.size()) break;
                if (!std::equal(from.begin(), from.end(), dd.begin() + i)) continue;
                Word rotw(u.begin() + i, u.end());
                rotw.insert(rotw.end(), u.begin(), u.begin() + i);
                Word v(rotw.begin() + 4, rotw.end());
                v.insert(v.end(), to.begin(), to.end());
                v = cyclic_dehn_reduce(free_reduce(v));
                if (v.size() == n && !seen.count(v)) stack.push_back(v);
            }
        }
    }
    return best;
}

CyclicKey WordSystem::key_impl(const Word& w0, int slack, bool fold_inverse) const {
    Word w = cyclic_dehn_reduce(w0);
    if (w.empty()) return CyclicKey{};
    size_t minlen = w.size();
    std::set<Word> forms;     // canonical rotation forms seen
    std::set<Word> expanded;  // forms whose conjugates were generated
    std::vector<Word> frontier{w};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (Word& uf : frontier) {
            Word u = std::move(uf);
            if (!forms.insert(min_rotation_form(u, fold_inverse)).second) {
            }
            if (u.size() < minlen) minlen = u.size();
            if (expanded.count(u)) continue;
            expanded.insert(u);
            size_t n = u.size();
            // rotations all conjugate; expand each rotation by letters
            Word dd = u;
            dd.insert(dd.end(), u.begin(), u.end());
            std::vector<Word> rots;
            for (size_t r = 0; r < n; ++r) rots.emplace_back(dd.begin() + r, dd.begin() + r + n);
            if (fold_inverse) {
                Word vi = word_inverse(u);
                Word di = vi;
                di.insert(di.end(), vi.begin(), vi.end());
                for (size_t r = 0; r < n; ++r)
                    rots.emplace_back(di.begin() + r, di.begin() + r + n);
            }
            for (const Word& rot : rots) {
                if (expanded.count(rot)) continue;
                expanded.insert(rot);
                for (Letter c = 0; c < 8; ++c) {
                    Word v;
                    v.reserve(rot.size() + 2);
                    v.push_back(letter_inverse(c));
                    v.insert(v.end(), rot.begin(), rot.end());
                    v.push_back(c);
                    v = cyclic_dehn_reduce(std::move(v));
                    if (v.size() <= minlen + size_t(slack)) {
                        Word mf = min_rotation_form(v, fold_inverse);
                        if (!forms.count(mf)) {
                            forms.insert(mf);
                            if (v.size() < minlen) minlen = v.size();
                            next.push_back(std::move(v));
                        }
                    }
                }
                // half swaps
                if (rot.size() >= 4) {
                    Word rd = rot;
                    rd.insert(rd.end(), rot.begin(), rot.begin() + 3);
                    for (const auto& [from, to] : half_swaps_) {
                        for (size_t i = 0; i < rot.size(); ++i) {
                            if (i + 4 > rd.size()) break;
                            if (!std::equal(from.begin(), from.end(), rd.begin() + i)) continue;
                            Word rotw(rot.begin() + i, rot.end());
                            rotw.insert(rotw.end(), rot.begin(), rot.begin() + i);
                            Word v(rotw.begin() + 4, rotw.end());
                            v.insert(v.end(), to.begin(), to.end());
                            v = cyclic_dehn_reduce(free_reduce(v));
                            if (v.size() <= minlen + size_t(slack)) {
                                Word mf = min_rotation_form(v, fold_inverse);
                                if (!forms.count(mf)) {
                                    forms.insert(mf);
                                    if (v.size() < minlen) minlen = v.size();
                                    next.push_back(std::move(v));
                                }
                            }
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    const Word* best = nullptr;
    for (const Word& f : forms)
        if (f.size() == minlen && (!best || f < *best)) best = &f;
    return CyclicKey{*best};
}

CyclicKey WordSystem::conjugacy_key(const Word& w, int slack) const {
    if (cyclic_dehn_reduce(w).empty())
        throw std::domain_error("conjugacy_key: identity word");
    return key_impl(w, slack, true);
}

CyclicKey WordSystem::oriented_conjugacy_key(const Word& w, int slack) const {
    if (cyclic_dehn_reduce(w).empty())
        throw std::domain_error("oriented_conjugacy_key: identity word");
    return key_impl(w, slack, false);
}

bool WordSystem::is_primitive(const Word& w) {
    size_t n = w.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (size_t i = 0; i < n && periodic; ++i)
            if (w[i] != w[(i + d) % n]) periodic = false;
        if (periodic) return false;
    }
    return true;
}

std::vector<Word> WordSystem::enumerate_words(int max_len) const {
    if (max_len < 1) throw std::invalid_argument("enumerate_words: max_len >= 1");
    std::vector<Word> out;
    Word cur;
    auto tail_reduced = [this](const Word& w) {
        if (w.size() >= 2 && w[w.size() - 2] == letter_inverse(w.back())) return false;
        if (w.size() < 5) return true;
        // only a suffix ending at the last letter can be newly forbidden
        size_t lo = w.size() >= 8 ? w.size() - 8 : 0;
        for (size_t i = lo; i + 5 <= w.size(); ++i) {
            int16_t r = prefix5_[pack5(w.data() + i)];
            if (r < 0) continue;
            size_t len = 5;
            const Word& rot = rotations_[r];
            while (len < 8 && i + len < w.size() && w[i + len] == rot[len]) ++len;
            if (i + len == w.size()) return false;
            // an interior match would have been caught at an earlier depth
        }
        return true;
    };
    std::function<void()> rec = [&]() {
        if (!cur.empty()) out.push_back(cur);
        if ((int)cur.size() == max_len) return;
        for (Letter c = 0; c < 8; ++c) {
            cur.push_back(c);
            if (tail_reduced(cur)) rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

const WordSystem& bolza_words() {
    static const WordSystem ws = [] {
        Word best;
        Word cur;
        std::function<void(const GroupElem&)> rec = [&](const GroupElem& g) {
            if (cur.size() == 8) {
                if (g.is_identity()) {
                    bool cyc = true;
                    for (int i = 0; i < 8; ++i)
                        if (cur[i] == letter_inverse(cur[(i + 1) % 8])) cyc = false;
                    if (cyc && (best.empty() || cur < best)) best = cur;
                }
                return;
            }
            for (Letter c = 0; c < 8; ++c) {
                if (!cur.empty() && c == letter_inverse(cur.back())) continue;
                cur.push_back(c);
                rec(g * letter_matrices()[c]);
                cur.pop_back();
            }
        };
        rec(GroupElem::identity());
        if (best.empty()) throw std::runtime_error("relator search failed");
        return WordSystem(best);
    }();
    return ws;
}

}  // namespace bolza
