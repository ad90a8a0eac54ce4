#include "token.hpp"

#include <sstream>

namespace vkr {

Token::Token(Kind k, int i_, int j_, int e) : kind(k), i(i_), j(j_), exp(e) {
    if (i == j) throw std::invalid_argument("token indices must differ");
    if (i < 1 || j < 1) throw std::invalid_argument("token indices are 1-based");
    if (e != 1 && e != -1) throw std::invalid_argument("token exponent must be +-1");
    if (kind == Kind::W && i > j) throw std::invalid_argument("W tokens require i<j");
}

Token W(int i, int j, int e) {
    if (i > j) return Token(Kind::W, j, i, -e);
    return Token(Kind::W, i, j, e);
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word pow(const Word& w, int k) {
    Word base = k >= 0 ? w : inverse(w);
    Word out;
    for (int t = 0; t < (k >= 0 ? k : -k); ++t) out = concat(out, base);
    return out;
}

std::string to_string(const Token& t) {
    static const char* names[] = {"R", "L", "W"};
    std::string s = names[static_cast<int>(t.kind)];
    s += "(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
    if (t.exp == -1) s += "^-1";
    return s;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += ' ';
        s += to_string(w[k]);
    }
    return s;
}

Token parse_token(const std::string& s) {
    size_t p = 0;
    auto fail = [&](const char* msg) { throw ParseError("bad token '" + s + "': " + msg); };
    if (p >= s.size()) fail("empty");
    Kind k;
    switch (s[p]) {
        case 'R': k = Kind::R; break;
        case 'L': k = Kind::L; break;
        case 'W': case 'w': k = Kind::W; break;
        default: fail("expected R, L or W"); k = Kind::R;
    }
    ++p;
    if (p >= s.size() || s[p] != '(') fail("expected '('");
    ++p;
    size_t comma = s.find(',', p);
    size_t close = s.find(')', p);
    if (comma == std::string::npos || close == std::string::npos || comma > close) fail("expected (i,j)");
    int i = 0, j = 0;
    try {
        i = std::stoi(s.substr(p, comma - p));
        j = std::stoi(s.substr(comma + 1, close - comma - 1));
    } catch (...) {
        fail("bad indices");
    }
    int e = 1;
    size_t rest = close + 1;
    if (rest < s.size()) {
        if (s.substr(rest) == "^-1")
            e = -1;
        else
            fail("trailing characters (only ^-1 allowed)");
    }
    if (i == j || i < 1 || j < 1) fail("invalid indices");
    if (k == Kind::W) return W(i, j, e);
    return Token(k, i, j, e);
}

Word parse_word(const std::string& s) {
    Word w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok == "1" || tok == "e") continue;  // empty-word marker
        w.push_back(parse_token(tok));
    }
    return w;
}

}  // namespace vkr
