#include "sdplab/site_config.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sdplab {

SiteConfig::SiteConfig(Rect domain, bool fill, bool outside)
    : domain_(domain), outside_(outside) {
    if (domain.x_max < domain.x_min || domain.y_max < domain.y_min)
        throw std::invalid_argument("SiteConfig: empty domain");
    if (domain.width() > 16384 || domain.height() > 16384)
        throw std::invalid_argument("SiteConfig: domain side exceeds 2^14");
    bits_.assign(std::size_t((domain.area() + 63) / 64), fill ? ~0ull : 0ull);
    if (fill) {
        // Clear slack bits so equality and popcounts stay exact.
        std::size_t used = std::size_t(domain.area()) & 63;
        if (used) bits_.back() &= (~0ull) >> (64 - used);
    }
}

std::int64_t SiteConfig::open_count() const {
    std::int64_t n = 0;
    for (auto w : bits_) n += __builtin_popcountll(w);
    return n;
}

namespace {
constexpr char magic[4] = {'S', 'D', 'P', 'C'};

void put_i32(std::ostream& os, std::int32_t v) {
    unsigned char b[4];
    std::uint32_t u = std::uint32_t(v);
    for (int i = 0; i < 4; ++i) b[i] = (u >> (8 * i)) & 0xff;
    os.write(reinterpret_cast<char*>(b), 4);
}
std::int32_t get_i32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t u = 0;
    for (int i = 0; i < 4; ++i) u |= std::uint32_t(b[i]) << (8 * i);
    return std::int32_t(u);
}
}  // namespace

void SiteConfig::save(std::ostream& os) const {
    os.write(magic, 4);
    os.put(1);  // version
    put_i32(os, domain_.x_min);
    put_i32(os, domain_.y_min);
    put_i32(os, domain_.x_max);
    put_i32(os, domain_.y_max);
    os.put(outside_ ? 1 : 0);
    std::int64_t nbits = domain_.area();
    std::int64_t nbytes = (nbits + 7) / 8;
    for (std::int64_t i = 0; i < nbytes; ++i) {
        unsigned v = unsigned(bits_[std::size_t(i) >> 3] >> ((i & 7) * 8)) & 0xff;
        os.put(char(v));
    }
}

SiteConfig SiteConfig::load(std::istream& is) {
    char m[4];
    is.read(m, 4);
    if (!is || std::memcmp(m, magic, 4) != 0)
        throw std::runtime_error("SiteConfig::load: bad magic");
    int version = is.get();
    if (version != 1) throw std::runtime_error("SiteConfig::load: unsupported version");
    std::int32_t x0 = get_i32(is), y0 = get_i32(is), x1 = get_i32(is), y1 = get_i32(is);
    int outside = is.get();
    SiteConfig cfg(Rect::box(x0, y0, x1, y1), false, outside != 0);
    std::int64_t nbytes = (cfg.domain_.area() + 7) / 8;
    for (std::int64_t i = 0; i < nbytes; ++i) {
        int v = is.get();
        if (v < 0) throw std::runtime_error("SiteConfig::load: truncated payload");
        cfg.bits_[std::size_t(i) >> 3] |= std::uint64_t(v & 0xff) << ((i & 7) * 8);
    }
    return cfg;
}

void SiteConfig::save_file(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for write: " + path);
    save(os);
}

SiteConfig SiteConfig::load_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for read: " + path);
    return load(is);
}

SiteConfig sample_config(const Rect& domain, double p, const RandomSource& source) {
    if (p >= 1.0) return SiteConfig(domain, true);
    SiteConfig cfg(domain);
    if (p <= 0.0) return cfg;
    auto eng = source.engine();
    std::uint64_t thr = bernoulli_threshold(p);
    std::size_t n = std::size_t(domain.area());
    for (std::size_t base = 0; base < n; base += 64) {
        std::uint64_t w = 0;
        std::size_t hi = std::min<std::size_t>(64, n - base);
        for (std::size_t b = 0; b < hi; ++b)
            w |= std::uint64_t(eng.next() < thr) << b;
        cfg.bits_[base >> 6] = w;
    }
    return cfg;
}

SiteConfig overlay(const SiteConfig& base, const SiteConfig& mask) {
    if (!mask.domain().contains(base.domain()))
        throw std::invalid_argument("overlay: mask domain must cover base domain");
    SiteConfig out = base;
    const Rect& d = base.domain();
    for (std::int32_t y = d.y_min; y <= d.y_max; ++y)
        for (std::int32_t x = d.x_min; x <= d.x_max; ++x)
            if (mask.get_unchecked({x, y})) out.set({x, y}, true);
    return out;
}

std::vector<Coord> outer_boundary(const std::vector<Coord>& a) {
    std::vector<Coord> out;
    auto in = [&](Coord c) {
        for (auto& s : a)
            if (s == c) return true;
        return false;
    };
    for (auto& s : a)
        for (auto d : primal_steps) {
            Coord c{s.x + d.x, s.y + d.y};
            if (in(c)) continue;
            bool seen = false;
            for (auto& o : out)
                if (o == c) { seen = true; break; }
            if (!seen) out.push_back(c);
        }
    return out;
}

std::vector<Coord> internal_boundary(const std::vector<Coord>& a) {
    std::vector<Coord> out;
    auto in = [&](Coord c) {
        for (auto& s : a)
            if (s == c) return true;
        return false;
    };
    for (auto& s : a)
        for (auto d : primal_steps)
            if (!in({s.x + d.x, s.y + d.y})) { out.push_back(s); break; }
    return out;
}

}  // namespace sdplab
