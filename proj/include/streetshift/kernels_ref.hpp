#pragma once

#include <cstddef>
#include <cstdint>

#include "streetshift/kernels.hpp"

// Reference kernels, templated on the scalar type. The float instantiation
// is the scalar backend; the double instantiation backs the
// finite-difference oracle evaluation path.
namespace streetshift::kernels::ref {

template <typename T>
void add(const T* a, const T* b, T* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

template <typename T>
void mul(const T* a, const T* b, T* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

template <typename T>
void affine(const T* x, T a, T b, T* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a * x[i] + b;
}

template <typename T>
void axpy(T a, const T* x, T* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += a * x[i];
}

template <typename T>
void madd(const T* a, const T* b, T* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += a[i] * b[i];
}

template <typename T>
void acc_affine2(const T* p, const T* q, T a, T b, T c, T* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        T t0 = a * p[i];
        T t1 = b * q[i];
        dst[i] += (t0 + t1) + c;
    }
}

template <typename T>
void leaky_relu(const T* x, T slope, T* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] > T(0) ? x[i] : slope * x[i];
}

template <typename T>
void leaky_relu_grad(const T* x, const T* gy, T slope, T* gx, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) gx[i] += x[i] > T(0) ? gy[i] : slope * gy[i];
}

template <typename T>
double sum(const T* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<double>(x[i]);
    return acc;
}

template <typename T>
double sum_abs(const T* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] < T(0) ? -static_cast<double>(x[i]) : static_cast<double>(x[i]);
    return acc;
}

template <typename T>
double sum_sq(const T* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<double>(x[i]) * static_cast<double>(x[i]);
    return acc;
}

template <typename T>
double dot(const T* a, const T* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

// Cross-correlation, output-centric. Accumulation runs over (ci, ky, kx) in
// that order with plain mul+add so the SIMD variant can replicate it per
// output lane bit-exactly.
template <typename T>
void conv2d_fwd(const T* x, const T* w, const T* bias, T* y, const ConvGeom& g) {
    const std::size_t in_plane = static_cast<std::size_t>(g.hi) * g.wi;
    const std::size_t w_per_co = static_cast<std::size_t>(g.ci) * g.k * g.k;
    for (int co = 0; co < g.co; ++co) {
        const T* wc = w + static_cast<std::size_t>(co) * w_per_co;
        for (int oy = 0; oy < g.ho; ++oy) {
            for (int ox = 0; ox < g.wo; ++ox) {
                T acc = bias ? bias[co] : T(0);
                for (int ci = 0; ci < g.ci; ++ci) {
                    const T* xp = x + static_cast<std::size_t>(ci) * in_plane;
                    const T* wk = wc + static_cast<std::size_t>(ci) * g.k * g.k;
                    for (int ky = 0; ky < g.k; ++ky) {
                        const int iy = oy * g.stride + ky - g.pad;
                        if (iy < 0 || iy >= g.hi) continue;
                        const T* xrow = xp + static_cast<std::size_t>(iy) * g.wi;
                        const T* wrow = wk + static_cast<std::size_t>(ky) * g.k;
                        for (int kx = 0; kx < g.k; ++kx) {
                            const int ix = ox * g.stride + kx - g.pad;
                            if (ix < 0 || ix >= g.wi) continue;
                            acc += xrow[ix] * wrow[kx];
                        }
                    }
                }
                y[(static_cast<std::size_t>(co) * g.ho + oy) * g.wo + ox] = acc;
            }
        }
    }
}

template <typename T>
void conv2d_bwd_w(const T* x, const T* gy, T* gw, T* gb, const ConvGeom& g) {
    const std::size_t in_plane = static_cast<std::size_t>(g.hi) * g.wi;
    const std::size_t out_plane = static_cast<std::size_t>(g.ho) * g.wo;
    for (int co = 0; co < g.co; ++co) {
        const T* gyc = gy + static_cast<std::size_t>(co) * out_plane;
        if (gb) {
            T acc = T(0);
            for (std::size_t i = 0; i < out_plane; ++i) acc += gyc[i];
            gb[co] += acc;
        }
        for (int ci = 0; ci < g.ci; ++ci) {
            const T* xp = x + static_cast<std::size_t>(ci) * in_plane;
            for (int ky = 0; ky < g.k; ++ky) {
                for (int kx = 0; kx < g.k; ++kx) {
                    T acc = T(0);
                    for (int oy = 0; oy < g.ho; ++oy) {
                        const int iy = oy * g.stride + ky - g.pad;
                        if (iy < 0 || iy >= g.hi) continue;
                        const T* xrow = xp + static_cast<std::size_t>(iy) * g.wi;
                        const T* gyrow = gyc + static_cast<std::size_t>(oy) * g.wo;
                        for (int ox = 0; ox < g.wo; ++ox) {
                            const int ix = ox * g.stride + kx - g.pad;
                            if (ix < 0 || ix >= g.wi) continue;
                            acc += gyrow[ox] * xrow[ix];
                        }
                    }
                    gw[((static_cast<std::size_t>(co) * g.ci + ci) * g.k + ky) * g.k + kx] += acc;
                }
            }
        }
    }
}

inline std::uint64_t ssd_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
        acc += static_cast<std::uint64_t>(d * d);
    }
    return acc;
}

inline std::uint64_t sad_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc += static_cast<std::uint64_t>(a[i] > b[i] ? a[i] - b[i] : b[i] - a[i]);
    return acc;
}

inline std::size_t count_changed_u8(const std::uint8_t* a, const std::uint8_t* b,
                                    std::size_t pixels, double thr_sq) {
    std::size_t changed = 0;
    for (std::size_t p = 0; p < pixels; ++p) {
        const std::size_t i = p * 3;
        const int dr = static_cast<int>(a[i]) - b[i];
        const int dg = static_cast<int>(a[i + 1]) - b[i + 1];
        const int db = static_cast<int>(a[i + 2]) - b[i + 2];
        const int d2 = dr * dr + dg * dg + db * db;
        if (static_cast<double>(d2) > thr_sq) ++changed;
    }
    return changed;
}

}  // namespace streetshift::kernels::ref
