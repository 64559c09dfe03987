#include "glint/mfsr.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "glint/fft.hpp"

namespace glint::mfsr {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// --------------------------------------------------------------------------
// registration
// --------------------------------------------------------------------------

std::vector<std::complex<double>> windowed_spectrum(const Image& img) {
    const int w = img.width, h = img.height;
    std::vector<std::complex<double>> buf(img.px.size());
    for (int y = 0; y < h; ++y) {
        const double wy = 0.5 - 0.5 * std::cos(2.0 * kPi * y / (h - 1 > 0 ? h - 1 : 1));
        for (int x = 0; x < w; ++x) {
            const double wx = 0.5 - 0.5 * std::cos(2.0 * kPi * x / (w - 1 > 0 ? w - 1 : 1));
            buf[static_cast<size_t>(y) * w + x] = img.at(x, y) * wx * wy;
        }
    }
    detail::fft2d(buf, w, h, false);
    return buf;
}

inline double wrap_signed(int idx, int n) { return idx <= n / 2 ? idx : idx - n; }

// peak offset of the phase-correlation surface with parabolic refinement
void phase_peak(const std::vector<double>& corr, int w, int h, double& dx, double& dy,
                double& peak) {
    int best = 0;
    for (size_t i = 1; i < corr.size(); ++i)
        if (corr[i] > corr[best]) best = static_cast<int>(i);
    const int bx = best % w, by = best / w;
    peak = corr[best];

    auto at = [&](int x, int y) {
        x = (x % w + w) % w;
        y = (y % h + h) % h;
        return corr[static_cast<size_t>(y) * w + x];
    };
    auto refine = [&](double cm, double c0, double cp) {
        const double den = cm - 2 * c0 + cp;
        if (std::abs(den) < 1e-15) return 0.0;
        return std::clamp(0.5 * (cm - cp) / den, -1.0, 1.0);
    };
    dx = wrap_signed(bx, w) + refine(at(bx - 1, by), at(bx, by), at(bx + 1, by));
    dy = wrap_signed(by, h) + refine(at(bx, by - 1), at(bx, by), at(bx, by + 1));
}

// --------------------------------------------------------------------------
// shared sampling conventions
//
// offsets mean: frame(x) = reference(x - offset), so reference content at
// coordinate q is seen in the frame at q + offset.
// --------------------------------------------------------------------------

using Offsets = std::vector<std::pair<double, double>>;

Image fuse_resample(const std::vector<const Image*>& frames, const Offsets& off, int scale,
                    bool bicubic) {
    const int lw = frames[0]->width, lh = frames[0]->height;
    Image out(lw * scale, lh * scale);
    for (int y = 0; y < out.height; ++y) {
        const double qy = (y + 0.5) / scale - 0.5;
        for (int x = 0; x < out.width; ++x) {
            const double qx = (x + 0.5) / scale - 0.5;
            double acc = 0.0;
            for (size_t k = 0; k < frames.size(); ++k) {
                const double sx = qx + off[k].first;
                const double sy = qy + off[k].second;
                acc += bicubic ? sample_bicubic(*frames[k], sx, sy)
                               : sample_bilinear(*frames[k], sx, sy);
            }
            out.at(x, y) = acc / frames.size();
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// adaptive kernel regression
// --------------------------------------------------------------------------

struct Steer {
    double q11, q12, q22;  // det-normalized steering matrix
};

// 6x6 SPD solve, Cholesky. Returns false if not positive definite.
bool solve6(double a[6][6], double b[6], double x[6]) {
    double l[6][6] = {};
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = a[i][j];
            for (int k = 0; k < j; ++k) sum -= l[i][k] * l[j][k];
            if (i == j) {
                if (sum <= 1e-14) return false;
                l[i][i] = std::sqrt(sum);
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }
    double yv[6];
    for (int i = 0; i < 6; ++i) {
        double sum = b[i];
        for (int k = 0; k < i; ++k) sum -= l[i][k] * yv[k];
        yv[i] = sum / l[i][i];
    }
    for (int i = 5; i >= 0; --i) {
        double sum = yv[i];
        for (int k = i + 1; k < 6; ++k) sum -= l[k][i] * x[k];
        x[i] = sum / l[i][i];
    }
    return true;
}

std::vector<Steer> steering_field(const Image& pilot, bool enabled) {
    const int w = pilot.width, h = pilot.height;
    std::vector<Steer> field(pilot.px.size(), Steer{1.0, 0.0, 1.0});
    if (!enabled) return field;

    const Image smooth = gaussian_blur(pilot, 1.0);
    Image gx(w, h), gy(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            gx.at(x, y) = 0.5 * (sample_clamped(smooth, x + 1, y) - sample_clamped(smooth, x - 1, y));
            gy.at(x, y) = 0.5 * (sample_clamped(smooth, x, y + 1) - sample_clamped(smooth, x, y - 1));
        }

    // local gradient covariance over a 5x5 window
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double t11 = 0, t12 = 0, t22 = 0;
            for (int j = -2; j <= 2; ++j)
                for (int i = -2; i <= 2; ++i) {
                    const double vx = sample_clamped(gx, x + i, y + j);
                    const double vy = sample_clamped(gy, x + i, y + j);
                    t11 += vx * vx;
                    t12 += vx * vy;
                    t22 += vy * vy;
                }
            // eigenvalues, condition-capped at 100
            const double tr = 0.5 * (t11 + t22);
            const double det_part = std::sqrt(std::max(0.0, 0.25 * (t11 - t22) * (t11 - t22) + t12 * t12));
            double l1 = tr + det_part, l2 = tr - det_part;
            if (l1 <= 1e-12) continue;  // flat region: identity steering
            l2 = std::max(l2, l1 / 100.0);
            // eigenvector for l1
            double ex, ey;
            if (std::abs(t12) > 1e-15) {
                ex = l1 - t22;
                ey = t12;
            } else if (t11 >= t22) {
                ex = 1;
                ey = 0;
            } else {
                ex = 0;
                ey = 1;
            }
            const double n = std::hypot(ex, ey);
            ex /= n;
            ey /= n;
            double q11 = l1 * ex * ex + l2 * ey * ey;
            double q12 = (l1 - l2) * ex * ey;
            double q22 = l1 * ey * ey + l2 * ex * ex;
            const double det = std::sqrt(std::max(1e-300, q11 * q22 - q12 * q12));
            field[static_cast<size_t>(y) * w + x] = {q11 / det, q12 / det, q22 / det};
        }
    return field;
}

Image akr_reconstruct(const std::vector<const Image*>& frames, const Offsets& off, int scale,
                      const MfsrParams& p, const Image& pilot) {
    const int lw = frames[0]->width, lh = frames[0]->height;
    const int hw = lw * scale, hh = lh * scale;
    const double h2 = p.akr_h * p.akr_h;
    const double radius = 3.0 * p.akr_h;
    const auto steer = steering_field(pilot, p.akr_steering);

    Image out(hw, hh);
    for (int y = 0; y < hh; ++y) {
        for (int x = 0; x < hw; ++x) {
            double A[6][6] = {};
            double B[6] = {};
            double wsum = 0.0, wval = 0.0;
            const Steer& st = steer[static_cast<size_t>(y) * hw + x];
            for (size_t k = 0; k < frames.size(); ++k) {
                // LR samples whose HR position falls within the footprint
                const double cx_l = (x + 0.5) / scale - 0.5 + off[k].first;
                const double cy_l = (y + 0.5) / scale - 0.5 + off[k].second;
                const double rad_l = radius / scale;
                const int x_lo = std::max(0, static_cast<int>(std::floor(cx_l - rad_l)));
                const int x_hi = std::min(lw - 1, static_cast<int>(std::ceil(cx_l + rad_l)));
                const int y_lo = std::max(0, static_cast<int>(std::floor(cy_l - rad_l)));
                const int y_hi = std::min(lh - 1, static_cast<int>(std::ceil(cy_l + rad_l)));
                for (int sy = y_lo; sy <= y_hi; ++sy) {
                    for (int sx = x_lo; sx <= x_hi; ++sx) {
                        const double dx = ((sx - off[k].first + 0.5) * scale - 0.5) - x;
                        const double dy = ((sy - off[k].second + 0.5) * scale - 0.5) - y;
                        const double r2 = dx * dx + dy * dy;
                        if (r2 > radius * radius) continue;
                        const double quad = st.q11 * dx * dx + 2 * st.q12 * dx * dy + st.q22 * dy * dy;
                        const double wgt = std::exp(-0.5 * quad / h2);
                        if (wgt < 1e-10) continue;
                        const double val = frames[k]->at(sx, sy);
                        const double phi[6] = {1.0, dx / p.akr_h, dy / p.akr_h,
                                               dx * dx / h2, dx * dy / h2, dy * dy / h2};
                        for (int i = 0; i < 6; ++i) {
                            B[i] += wgt * phi[i] * val;
                            for (int j = 0; j <= i; ++j) A[i][j] += wgt * phi[i] * phi[j];
                        }
                        wsum += wgt;
                        wval += wgt * val;
                    }
                }
            }
            if (wsum <= 0) {
                out.at(x, y) = sample_bilinear(pilot, x, y);
                continue;
            }
            for (int i = 0; i < 6; ++i) {
                for (int j = i + 1; j < 6; ++j) A[i][j] = A[j][i];
                A[i][i] += 1e-9 * wsum;
            }
            double coef[6];
            out.at(x, y) = solve6(A, B, coef) ? coef[0] : wval / wsum;
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// robust L1 data term + bilateral TV prior
// --------------------------------------------------------------------------

Image decimate_box(const Image& hr, int scale) {
    Image out(hr.width / scale, hr.height / scale);
    const double inv = 1.0 / (scale * scale);
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x) {
            double acc = 0;
            for (int j = 0; j < scale; ++j)
                for (int i = 0; i < scale; ++i) acc += hr.at(x * scale + i, y * scale + j);
            out.at(x, y) = acc * inv;
        }
    return out;
}

Image upsample_splat(const Image& lr, int scale) {
    Image out(lr.width * scale, lr.height * scale);
    const double inv = 1.0 / (scale * scale);
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x) out.at(x, y) = lr.at(x / scale, y / scale) * inv;
    return out;
}

Image shift_int(const Image& img, int dx, int dy) {
    Image out(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) out.at(x, y) = sample_clamped(img, x - dx, y - dy);
    return out;
}

struct L1Context {
    const std::vector<const Image*>& frames;
    const Offsets& off;
    int scale;
    double psf_sigma;
    double lambda;
    int btv_p;
    double btv_alpha;
};

double l1_objective(const Image& hr, const L1Context& ctx) {
    double obj = 0.0;
    for (size_t k = 0; k < ctx.frames.size(); ++k) {
        Image w = shift_bilinear(hr, ctx.off[k].first * ctx.scale, ctx.off[k].second * ctx.scale);
        w = gaussian_blur(w, ctx.psf_sigma);
        const Image lr = decimate_box(w, ctx.scale);
        for (size_t i = 0; i < lr.px.size(); ++i) obj += std::abs(lr.px[i] - ctx.frames[k]->px[i]);
    }
    for (int m = -ctx.btv_p; m <= ctx.btv_p; ++m)
        for (int l = -ctx.btv_p; l <= ctx.btv_p; ++l) {
            if (l == 0 && m == 0) continue;
            const double wgt = std::pow(ctx.btv_alpha, std::abs(l) + std::abs(m));
            const Image sh = shift_int(hr, l, m);
            double term = 0.0;
            for (size_t i = 0; i < hr.px.size(); ++i) term += std::abs(hr.px[i] - sh.px[i]);
            obj += ctx.lambda * wgt * term;
        }
    return obj;
}

Image l1_gradient(const Image& hr, const L1Context& ctx) {
    Image grad(hr.width, hr.height, 0.0);
    for (size_t k = 0; k < ctx.frames.size(); ++k) {
        Image w = shift_bilinear(hr, ctx.off[k].first * ctx.scale, ctx.off[k].second * ctx.scale);
        w = gaussian_blur(w, ctx.psf_sigma);
        Image lr = decimate_box(w, ctx.scale);
        for (size_t i = 0; i < lr.px.size(); ++i) {
            const double d = lr.px[i] - ctx.frames[k]->px[i];
            lr.px[i] = d > 0 ? 1.0 : (d < 0 ? -1.0 : 0.0);
        }
        Image up = upsample_splat(lr, ctx.scale);
        up = gaussian_blur(up, ctx.psf_sigma);
        up = shift_bilinear(up, -ctx.off[k].first * ctx.scale, -ctx.off[k].second * ctx.scale);
        for (size_t i = 0; i < grad.px.size(); ++i) grad.px[i] += up.px[i];
    }
    for (int m = -ctx.btv_p; m <= ctx.btv_p; ++m)
        for (int l = -ctx.btv_p; l <= ctx.btv_p; ++l) {
            if (l == 0 && m == 0) continue;
            const double wgt = ctx.lambda * std::pow(ctx.btv_alpha, std::abs(l) + std::abs(m));
            Image sh = shift_int(hr, l, m);
            for (size_t i = 0; i < sh.px.size(); ++i) {
                const double d = hr.px[i] - sh.px[i];
                sh.px[i] = d > 0 ? 1.0 : (d < 0 ? -1.0 : 0.0);
            }
            const Image back = shift_int(sh, -l, -m);
            for (size_t i = 0; i < grad.px.size(); ++i)
                grad.px[i] += wgt * (sh.px[i] - back.px[i]);
        }
    return grad;
}

} // namespace

void MfsrParams::validate() const {
    require(scale_factor >= 1, "mfsr: scale_factor must be >= 1");
    require(n_frames >= 1, "mfsr: n_frames must be >= 1");
    require(akr_h > 0, "mfsr: akr_h must be positive");
    require(akr_order == 2, "mfsr: only second-order regression is implemented");
    require(l1_btv_window >= 0 && l1_iterations >= 0 && l1_step > 0 && l1_lambda >= 0,
            "mfsr: bad robust_l1 parameters");
}

RegistrationResult register_stack(const sim::FrameStack& stack) {
    stack.validate();
    require(stack.frames.size() >= 2, "register_stack: need at least 2 frames");
    const int n = static_cast<int>(stack.frames.size());
    const int ref = n / 2;
    const int w = stack.frames[0].width, h = stack.frames[0].height;

    RegistrationResult res;
    res.reference_index = ref;
    res.offsets.assign(n, {0.0, 0.0});
    res.confidence.assign(n, 0.0);

    const bool ref_flat = stddev(stack.frames[ref]) < 1e-9;
    const auto ref_spec = windowed_spectrum(stack.frames[ref]);

    for (int k = 0; k < n; ++k) {
        if (k == ref) {
            res.confidence[k] = 1.0;
            continue;
        }
        if (ref_flat || stddev(stack.frames[k]) < 1e-9) continue;  // zero offset, zero confidence
        const auto spec = windowed_spectrum(stack.frames[k]);
        std::vector<std::complex<double>> cross(spec.size());
        for (size_t i = 0; i < spec.size(); ++i) {
            const std::complex<double> c = ref_spec[i] * std::conj(spec[i]);
            const double mag = std::abs(c);
            cross[i] = mag > 1e-15 ? c / mag : std::complex<double>(0.0, 0.0);
        }
        detail::fft2d(cross, w, h, true);
        std::vector<double> corr(cross.size());
        for (size_t i = 0; i < cross.size(); ++i) corr[i] = cross[i].real();
        double dx, dy, peak;
        phase_peak(corr, w, h, dx, dy, peak);
        res.offsets[k] = {dx, dy};
        res.confidence[k] = std::clamp(peak, 0.0, 1.0);
    }
    return res;
}

Reconstruction reconstruct(const sim::FrameStack& stack, const MfsrParams& params) {
    params.validate();
    stack.validate();
    require(static_cast<int>(stack.frames.size()) >= params.n_frames,
            "reconstruct: insufficient frames in stack");

    sim::FrameStack sub;
    sub.frames.assign(stack.frames.begin(), stack.frames.begin() + params.n_frames);
    sub.frame_rate = stack.frame_rate;

    Offsets off(params.n_frames, {0.0, 0.0});
    if (params.n_frames >= 2) {
        const auto reg = register_stack(sub);
        off = reg.offsets;
    }
    std::vector<const Image*> frames;
    frames.reserve(sub.frames.size());
    for (const auto& f : sub.frames) frames.push_back(&f);

    Reconstruction result;
    switch (params.method) {
        case Method::Average:
            result.image = fuse_resample(frames, off, params.scale_factor, false);
            return result;
        case Method::Spline:
            result.image = fuse_resample(frames, off, params.scale_factor, true);
            return result;
        case Method::Akr: {
            const Image pilot = fuse_resample(frames, off, params.scale_factor, false);
            result.image = akr_reconstruct(frames, off, params.scale_factor, params, pilot);
            return result;
        }
        case Method::RobustL1: {
            Image x = fuse_resample(frames, off, params.scale_factor, false);
            L1Context ctx{frames, off, params.scale_factor, 0.5 * params.scale_factor,
                          params.l1_lambda, params.l1_btv_window, params.l1_btv_alpha};
            double obj = l1_objective(x, ctx);
            result.objective_trace.push_back(obj);
            double step = params.l1_step;
            const double min_step = params.l1_step * 1e-3;
            for (int it = 0; it < params.l1_iterations && step >= min_step; ++it) {
                const Image grad = l1_gradient(x, ctx);
                for (;;) {
                    Image cand = x;
                    for (size_t i = 0; i < cand.px.size(); ++i) cand.px[i] -= step * grad.px[i];
                    const double cand_obj = l1_objective(cand, ctx);
                    if (cand_obj <= obj) {
                        x = std::move(cand);
                        obj = cand_obj;
                        result.objective_trace.push_back(obj);
                        break;
                    }
                    step *= 0.5;
                    if (step < min_step) break;
                }
            }
            result.converged = step >= min_step;
            result.image = std::move(x);
            return result;
        }
    }
    throw std::logic_error("reconstruct: unknown method");
}

Method method_from_name(const std::string& name) {
    if (name == "average") return Method::Average;
    if (name == "spline") return Method::Spline;
    if (name == "robust_l1") return Method::RobustL1;
    if (name == "akr") return Method::Akr;
    throw std::invalid_argument("unknown MFSR method '" + name +
                                "' (expected average|spline|robust_l1|akr)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Average: return "average";
        case Method::Spline: return "spline";
        case Method::RobustL1: return "robust_l1";
        case Method::Akr: return "akr";
    }
    return "?";
}

} // namespace glint::mfsr
