#include "horocalc/groups.hpp"

#include <algorithm>
#include <cctype>

namespace horocalc {

namespace {

std::vector<std::int64_t> parse_integers(const std::string& s)
{
    std::vector<std::int64_t> out;
    std::string digits;
    auto flush = [&] {
        if (digits.empty())
            return;
        if (digits == "-" || digits == "+")
            throw std::invalid_argument("malformed element: " + s);
        out.push_back(std::stoll(digits));
        digits.clear();
    };
    for (char ch : s)
    {
        if (std::isdigit(static_cast<unsigned char>(ch)) || ((ch == '-' || ch == '+') && digits.empty()))
            digits += ch;
        else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']' ||
                 ch == '{' || ch == '}')
            flush();
        else
            throw std::invalid_argument("malformed element: " + s);
    }
    flush();
    return out;
}

std::string join(const std::vector<std::int64_t>& v, char open, char close)
{
    std::string s(1, open);
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + close;
}

} // namespace

ZdGroup::ZdGroup(std::size_t dim, std::vector<Element> generators) : dim_(dim)
{
    for (const Element& g : generators)
        if (g.size() != dim)
            throw DimensionMismatch();
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    if (!std::binary_search(generators.begin(), generators.end(), identity()))
        throw std::invalid_argument("generating set must contain the identity");
    gens_ = std::move(generators);
}

ZdGroup ZdGroup::cube(std::size_t dim)
{
    std::vector<Element> gens = {Element()};
    for (std::size_t i = 0; i < dim; ++i)
    {
        std::vector<Element> next;
        for (const Element& g : gens)
            for (std::int64_t c : {-1, 0, 1})
            {
                Element h = g;
                h.push_back(c);
                next.push_back(std::move(h));
            }
        gens.swap(next);
    }
    return ZdGroup(dim, gens);
}

ZdGroup::Element ZdGroup::multiply(const Element& a, const Element& b) const
{
    Element out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        out[i] = a[i] + b[i];
    return out;
}

ZdGroup::Element ZdGroup::inverse(const Element& a) const
{
    Element out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        out[i] = -a[i];
    return out;
}

std::string ZdGroup::encode(const Element& a) const
{
    return join(a, '(', ')');
}

ZdGroup::Element ZdGroup::decode(const std::string& s) const
{
    Element e = parse_integers(s);
    if (e.size() != dim_)
        throw DimensionMismatch("element " + s + " has the wrong dimension");
    return e;
}

HeisenbergGroup::HeisenbergGroup()
{
    gens_ = {identity(), a(), inverse(a()), b(), inverse(b())};
    std::sort(gens_.begin(), gens_.end());
}

HeisenbergGroup::Element HeisenbergGroup::commutator() const
{
    return multiply(multiply(a(), b()), multiply(inverse(a()), inverse(b())));
}

std::string HeisenbergGroup::encode(const Element& g) const
{
    return join({g[0], g[1], g[2]}, '(', ')');
}

HeisenbergGroup::Element HeisenbergGroup::decode(const std::string& s) const
{
    std::vector<std::int64_t> v = parse_integers(s);
    if (v.size() != 3)
        throw std::invalid_argument("Heisenberg elements have three coordinates: " + s);
    return {v[0], v[1], v[2]};
}

LamplighterGroup::LamplighterGroup()
{
    Element a;
    a.lamps = {0};
    Element t, t_inv;
    t.position = 1;
    t_inv.position = -1;
    gens_ = {identity(), a, t, t_inv};
    std::sort(gens_.begin(), gens_.end());
}

LamplighterGroup::Element LamplighterGroup::multiply(const Element& g, const Element& h) const
{
    std::vector<std::int64_t> moved = h.lamps;
    for (std::int64_t& x : moved)
        x += g.position;
    Element out;
    std::set_symmetric_difference(g.lamps.begin(), g.lamps.end(), moved.begin(), moved.end(),
                                  std::back_inserter(out.lamps));
    out.position = g.position + h.position;
    return out;
}

LamplighterGroup::Element LamplighterGroup::inverse(const Element& g) const
{
    Element out;
    out.lamps = g.lamps;
    for (std::int64_t& x : out.lamps)
        x -= g.position;
    out.position = -g.position;
    return out;
}

std::string LamplighterGroup::encode(const Element& g) const
{
    return join(g.lamps, '{', '}') + "@" + std::to_string(g.position);
}

LamplighterGroup::Element LamplighterGroup::decode(const std::string& s) const
{
    const auto at = s.find('@');
    if (at == std::string::npos)
        throw std::invalid_argument("lamplighter elements look like {lamps}@position: " + s);
    Element g;
    g.lamps = parse_integers(s.substr(0, at));
    std::sort(g.lamps.begin(), g.lamps.end());
    if (std::adjacent_find(g.lamps.begin(), g.lamps.end()) != g.lamps.end())
        throw std::invalid_argument("repeated lamp in " + s);
    std::vector<std::int64_t> pos = parse_integers(s.substr(at + 1));
    if (pos.size() != 1)
        throw std::invalid_argument("malformed lamplighter position: " + s);
    g.position = pos[0];
    return g;
}

LamplighterGroup::Element LamplighterGroup::dead_end_element(std::int64_t n)
{
    Element g;
    for (std::int64_t x = -n; x <= n; ++x)
        g.lamps.push_back(x);
    return g;
}

FreeGroup::FreeGroup(int rank) : rank_(rank)
{
    if (rank < 1 || rank > 26)
        throw std::invalid_argument("free group rank must be in [1, 26]");
    gens_.push_back(identity());
    for (int i = 0; i < rank; ++i)
    {
        gens_.push_back(std::string(1, static_cast<char>('a' + i)));
        gens_.push_back(std::string(1, static_cast<char>('A' + i)));
    }
    std::sort(gens_.begin(), gens_.end());
}

FreeGroup::Element FreeGroup::multiply(const Element& g, const Element& h) const
{
    Element out = g;
    for (char ch : h)
    {
        if (!out.empty() && out.back() != ch &&
            std::tolower(static_cast<unsigned char>(out.back())) ==
                std::tolower(static_cast<unsigned char>(ch)))
            out.pop_back();
        else
            out.push_back(ch);
    }
    return out;
}

FreeGroup::Element FreeGroup::inverse(const Element& g) const
{
    Element out(g.rbegin(), g.rend());
    for (char& ch : out)
        ch = std::isupper(static_cast<unsigned char>(ch)) ? static_cast<char>(std::tolower(ch))
                                                           : static_cast<char>(std::toupper(ch));
    return out;
}

FreeGroup::Element FreeGroup::decode(const std::string& s) const
{
    if (s == "e")
        return identity();
    for (char ch : s)
    {
        const int letter = std::tolower(static_cast<unsigned char>(ch)) - 'a';
        if (!std::isalpha(static_cast<unsigned char>(ch)) || letter >= rank_)
            throw std::invalid_argument("malformed free group word: " + s);
    }
    return multiply(identity(), s);
}

std::optional<int> heisenberg_commutator_check(int m, int n_max)
{
    if (m < 0)
        throw std::invalid_argument("commutator exponent must be non-negative");
    HeisenbergGroup h;
    const BallTable<HeisenbergGroup> table = ball(h, n_max + 2);
    HeisenbergGroup::Element cm = h.identity();
    for (int i = 0; i < m; ++i)
        cm = h.multiply(cm, h.commutator());
    for (int n = 1; n <= n_max; ++n)
    {
        bool inside = true;
        for (auto it = table.length.begin(); it != table.length.end() && inside; ++it)
        {
            if (it->second > n)
                continue;
            auto len = table.length_of(h.multiply(cm, it->first));
            inside = len && *len <= n + 2;
        }
        if (inside)
            return n;
    }
    return std::nullopt;
}

std::pair<Rational, Rational> root_bounds(const Integer& n, int r, unsigned bits)
{
    if (n < 1 || r < 1)
        throw std::invalid_argument("root bounds need n >= 1 and r >= 1");
    const Integer scaled = n << (bits * static_cast<unsigned>(r));
    const unsigned e = static_cast<unsigned>(r);
    Integer lo = 0, hi = Integer(1) << (bits + static_cast<unsigned>(boost::multiprecision::msb(n)) / e + 1);
    // Largest x with x^r <= scaled.
    while (hi - lo > 1)
    {
        Integer mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, e) <= scaled)
            lo = mid;
        else
            hi = mid;
    }
    const Integer den = Integer(1) << bits;
    return {Rational(lo, den), Rational(lo + 1, den)};
}

} // namespace horocalc
