#include "subapprox/rng.hpp"

namespace subapprox {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

StreamRng::StreamRng(std::uint64_t seed) : key_(splitmix64(seed)), engine_(key_) {}

StreamRng StreamRng::split(std::uint64_t stream) const {
    return StreamRng(key_ ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

double StreamRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

}  // namespace subapprox
