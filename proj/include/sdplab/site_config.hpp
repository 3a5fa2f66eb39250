#ifndef SDPLAB_SITE_CONFIG_HPP
#define SDPLAB_SITE_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdplab/geometry.hpp"
#include "sdplab/rng.hpp"

namespace sdplab {

// One bit per site on a finite domain; sites outside the domain take a fixed
// default value (0 unless stated).  Treat as immutable once built.
class SiteConfig {
  public:
    SiteConfig() = default;
    SiteConfig(Rect domain, bool fill = false, bool outside = false);

    const Rect& domain() const { return domain_; }
    bool outside_value() const { return outside_; }

    bool get(Coord c) const {
        if (!domain_.contains(c)) return outside_;
        return get_unchecked(c);
    }
    bool get_unchecked(Coord c) const {
        std::size_t i = index(c);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(Coord c, bool v) {
        std::size_t i = index(c);
        if (v)
            bits_[i >> 6] |= 1ull << (i & 63);
        else
            bits_[i >> 6] &= ~(1ull << (i & 63));
    }

    std::int64_t open_count() const;
    bool is_open(Coord c) const { return get(c); }

    // Byte-exact raw bitmap: fixed header, then rows bottom-to-top from
    // (x_min, y_min), bits packed LSB-first.  Little-endian integers.
    void save(std::ostream& os) const;
    static SiteConfig load(std::istream& is);
    void save_file(const std::string& path) const;
    static SiteConfig load_file(const std::string& path);

    friend bool operator==(const SiteConfig& a, const SiteConfig& b) {
        return a.domain_ == b.domain_ && a.outside_ == b.outside_ && a.bits_ == b.bits_;
    }

  private:
    friend SiteConfig sample_config(const Rect&, double, const RandomSource&);
    std::size_t index(Coord c) const {
        return std::size_t(c.y - domain_.y_min) * std::size_t(domain_.width()) +
               std::size_t(c.x - domain_.x_min);
    }
    Rect domain_{0, 0, -1, -1};
    bool outside_ = false;
    std::vector<std::uint64_t> bits_;
};

// Product measure P_p on the domain, one draw per site in row-major order so
// the result is a pure function of (domain, p, source).
SiteConfig sample_config(const Rect& domain, double p, const RandomSource& source);

// Pointwise OR onto base's domain.  mask must cover base's domain.
SiteConfig overlay(const SiteConfig& base, const SiteConfig& mask);

}  // namespace sdplab

#endif
