#include "c2inv/subset.hpp"

#include <algorithm>
#include <bit>

#include "c2inv/error.hpp"

namespace c2inv {

namespace {

void check_m(std::size_t m)
{
    if (m > kMaxSummands)
        throw PreconditionError("m=" + std::to_string(m) + " exceeds the supported maximum " +
                                std::to_string(kMaxSummands));
}

}  // namespace

Subset::Subset(std::size_t m) : m_(m) { check_m(m); }

Subset Subset::from_bits(std::size_t m, std::uint32_t value)
{
    Subset s(m);
    if (m < 32 && (value >> m) != 0)
        throw PreconditionError("subset value " + std::to_string(value) + " does not fit in m=" + std::to_string(m));
    s.bits_ = value;
    return s;
}

Subset Subset::parse(std::string_view bits) { return parse(bits.size(), bits); }

Subset Subset::parse(std::size_t m, std::string_view bits)
{
    if (bits.size() != m)
        throw ParseError("bitstring '" + std::string(bits) + "' must have length " + std::to_string(m));
    Subset s(m);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            s.bits_ |= s.bit_of(i + 1);
        else if (bits[i] != '0')
            throw ParseError("bitstring '" + std::string(bits) + "' contains a character other than 0/1");
    }
    return s;
}

Subset Subset::delta(std::size_t m, std::size_t position) { return Subset(m).with(position); }

Subset Subset::full(std::size_t m)
{
    Subset s(m);
    s.bits_ = m == 32 ? ~0u : ((1u << m) - 1);
    return s;
}

std::uint32_t Subset::bit_of(std::size_t position) const
{
    if (position < 1 || position > m_)
        throw PreconditionError("position " + std::to_string(position) + " out of range 1.." + std::to_string(m_));
    return 1u << (m_ - position);
}

std::size_t Subset::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

bool Subset::contains(std::size_t position) const { return (bits_ & bit_of(position)) != 0; }

Subset Subset::with(std::size_t position) const
{
    Subset s = *this;
    s.bits_ |= bit_of(position);
    return s;
}

Subset Subset::without(std::size_t position) const
{
    Subset s = *this;
    s.bits_ &= ~bit_of(position);
    return s;
}

std::size_t Subset::leading() const
{
    if (bits_ == 0)
        throw EmptyError("l(A) is undefined for the empty subset");
    return m_ + 1 - static_cast<std::size_t>(std::bit_width(bits_));
}

Subset Subset::without_leading() const { return without(leading()); }

bool Subset::subset_of(const Subset& other) const
{
    check_same_m(m_, other.m_);
    return (bits_ & ~other.bits_) == 0;
}

bool Subset::disjoint(const Subset& other) const
{
    check_same_m(m_, other.m_);
    return (bits_ & other.bits_) == 0;
}

std::vector<std::size_t> Subset::positions() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= m_; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

std::vector<Subset> Subset::proper_subsets() const
{
    std::vector<Subset> out;
    if (bits_ == 0)
        return out;
    // Standard submask walk, collected then reversed into increasing order.
    std::uint32_t sub = bits_;
    do {
        sub = (sub - 1) & bits_;
        Subset s(m_);
        s.bits_ = sub;
        out.push_back(s);
    } while (sub != 0);
    std::reverse(out.begin(), out.end());
    return out;
}

std::string Subset::to_string() const
{
    std::string out(m_, '0');
    for (std::size_t i = 1; i <= m_; ++i)
        if (contains(i))
            out[i - 1] = '1';
    return out;
}

Subset operator&(const Subset& a, const Subset& b)
{
    check_same_m(a.m_, b.m_);
    Subset s(a.m_);
    s.bits_ = a.bits_ & b.bits_;
    return s;
}

Subset operator|(const Subset& a, const Subset& b)
{
    check_same_m(a.m_, b.m_);
    Subset s(a.m_);
    s.bits_ = a.bits_ | b.bits_;
    return s;
}

Subset operator-(const Subset& a, const Subset& b)
{
    check_same_m(a.m_, b.m_);
    Subset s(a.m_);
    s.bits_ = a.bits_ & ~b.bits_;
    return s;
}

Subset operator+(const Subset& a, const Subset& b)
{
    check_same_m(a.m_, b.m_);
    if ((a.bits_ & b.bits_) != 0)
        throw PreconditionError("sum of zero/one sequences " + a.to_string() + " + " + b.to_string() +
                                " leaves {0,1}^m");
    Subset s(a.m_);
    s.bits_ = a.bits_ | b.bits_;
    return s;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b)
{
    if (auto c = a.m_ <=> b.m_; c != 0)
        return c;
    return a.bits_ <=> b.bits_;
}

std::vector<Subset> subsets_of_size_at_least(std::size_t m, std::size_t min_size)
{
    std::vector<Subset> out;
    if (m >= 31)
        throw PreconditionError("subset enumeration is limited to m <= 30");
    for (std::uint32_t v = 0; v < (1u << m); ++v) {
        if (static_cast<std::size_t>(std::popcount(v)) >= min_size)
            out.push_back(Subset::from_bits(m, v));
    }
    return out;
}

}  // namespace c2inv
