#include "msnake/words.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace msnake {

RationalIndex::RationalIndex(int a_, int b_) : a(a_), b(b_) {
    if (a < 1 || b < 1 || a > b)
        throw std::invalid_argument("rational index must satisfy 1 <= a <= b, got " + str());
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("rational index must be in lowest terms, got " + str());
}

RationalIndex parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw std::invalid_argument("expected a/b, got '" + s + "'");
    std::size_t pos_a = 0, pos_b = 0;
    int a = 0, b = 0;
    try {
        a = std::stoi(s.substr(0, slash), &pos_a);
        b = std::stoi(s.substr(slash + 1), &pos_b);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a/b, got '" + s + "'");
    }
    if (pos_a != slash || pos_b != s.size() - slash - 1)
        throw std::invalid_argument("expected a/b, got '" + s + "'");
    return RationalIndex(a, b);
}

std::string christoffel_word(RationalIndex rho) {
    const std::int64_t a = rho.a, b = rho.b;
    std::string w;
    w.reserve(static_cast<std::size_t>(a + b));
    std::int64_t p = 0, q = 0;
    while (p < b || q < a) {
        if ((q + 1) * b <= a * p) {
            w.push_back('b');
            ++q;
        } else {
            w.push_back('a');
            ++p;
        }
    }
    return w;
}

std::string modify_word(const std::string& w) {
    std::string m;
    for (std::size_t i = 0; i < w.size();) {
        if (w[i] == 'a' && i + 1 < w.size() && w[i + 1] == 'b') {
            m.push_back('B');
            i += 2;
        } else if (w[i] == 'a') {
            m.push_back('A');
            i += 1;
        } else if (w[i] == 'b') {
            throw MalformedWord("'b' at position " + std::to_string(i) +
                                " is not preceded by an 'a'");
        } else {
            throw MalformedWord("unexpected letter '" + std::string(1, w[i]) + "'");
        }
    }
    return m;
}

std::vector<int> run_profile(const std::string& modified) {
    std::vector<int> runs;
    for (std::size_t i = 0; i < modified.size(); ++i) {
        if (modified[i] != 'A') continue;
        int r = 0;
        std::size_t j = i + 1;
        while (j < modified.size() && modified[j] == 'B') {
            ++r;
            ++j;
        }
        if (j == modified.size() && r > 0) --r;  // the trailing B takes no step
        runs.push_back(r);
    }
    return runs;
}

}  // namespace msnake
