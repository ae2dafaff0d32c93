#include "streetshift/kernels.hpp"
#include "streetshift/kernels_ref.hpp"

namespace streetshift::kernels {

namespace {

void s_add(const float* a, const float* b, float* dst, std::size_t n) { ref::add(a, b, dst, n); }
void s_mul(const float* a, const float* b, float* dst, std::size_t n) { ref::mul(a, b, dst, n); }
void s_affine(const float* x, float a, float b, float* dst, std::size_t n) { ref::affine(x, a, b, dst, n); }
void s_axpy(float a, const float* x, float* dst, std::size_t n) { ref::axpy(a, x, dst, n); }
void s_madd(const float* a, const float* b, float* dst, std::size_t n) { ref::madd(a, b, dst, n); }
void s_acc_affine2(const float* p, const float* q, float a, float b, float c, float* dst,
                   std::size_t n) { ref::acc_affine2(p, q, a, b, c, dst, n); }
void s_leaky(const float* x, float slope, float* dst, std::size_t n) { ref::leaky_relu(x, slope, dst, n); }
void s_leaky_grad(const float* x, const float* gy, float slope, float* gx, std::size_t n) {
    ref::leaky_relu_grad(x, gy, slope, gx, n);
}
double s_sum(const float* x, std::size_t n) { return ref::sum(x, n); }
double s_sum_abs(const float* x, std::size_t n) { return ref::sum_abs(x, n); }
double s_sum_sq(const float* x, std::size_t n) { return ref::sum_sq(x, n); }
double s_dot(const float* a, const float* b, std::size_t n) { return ref::dot(a, b, n); }
void s_conv2d_fwd(const float* x, const float* w, const float* bias, float* y, const ConvGeom& g) {
    ref::conv2d_fwd(x, w, bias, y, g);
}
void s_conv2d_bwd_w(const float* x, const float* gy, float* gw, float* gb, const ConvGeom& g) {
    ref::conv2d_bwd_w(x, gy, gw, gb, g);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table = {
        "scalar",
        s_add,
        s_mul,
        s_affine,
        s_axpy,
        s_madd,
        s_acc_affine2,
        s_leaky,
        s_leaky_grad,
        s_sum,
        s_sum_abs,
        s_sum_sq,
        s_dot,
        s_conv2d_fwd,
        s_conv2d_bwd_w,
        ref::ssd_u8,
        ref::sad_u8,
        ref::count_changed_u8,
    };
    return table;
}

}  // namespace streetshift::kernels
