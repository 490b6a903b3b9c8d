// Copyright 2026 The qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.h"

#include <cmath>
#include <numbers>
#include <type_traits>

namespace qss::testing {

std::complex<double> omega_power(int p, long long e) {
    const int order = p == 2 ? 4 : p;
    long long r = e % order;
    if (r < 0) {
        r += order;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / order);
}

std::complex<double> root_power(int p, long long e) {
    long long r = e % p;
    if (r < 0) {
        r += p;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / p);
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

namespace {

std::vector<std::size_t> digits_of(std::size_t index, std::size_t p, std::size_t m) {
    std::vector<std::size_t> d(m);
    for (std::size_t q = m; q-- > 0;) {
        d[q] = index % p;
        index /= p;
    }
    return d;
}

std::size_t index_of(const std::vector<std::size_t> &d, std::size_t p) {
    std::size_t r = 0;
    for (auto x : d) {
        r = r * p + x;
    }
    return r;
}

// Single-qudit (X^a Z^b)^j as a dense p x p matrix by repeated multiplication.
Eigen::MatrixXcd single_power(int p, int a, int b, long long j) {
    const auto d = static_cast<Eigen::Index>(p);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index s = 0; s < d; ++s) {
        x((s + 1) % d, s) = 1.0;
        z(s, s) = root_power(p, s);
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
    for (int i = 0; i < a; ++i) {
        m = m * x;
    }
    for (int i = 0; i < b; ++i) {
        m = m * z;
    }
    Eigen::MatrixXcd base = j < 0 ? Eigen::MatrixXcd(m.inverse()) : m;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(d, d);
    for (long long i = 0; i < (j < 0 ? -j : j); ++i) {
        out = out * base;
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd dense_pauli(int p, const SymplecticVector &v) {
    const std::size_t n = v.n();
    const std::size_t dim = ipow(static_cast<std::size_t>(p), n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        auto d = digits_of(col, static_cast<std::size_t>(p), n);
        long long zexp = 0;
        for (std::size_t q = 0; q < n; ++q) {
            zexp += static_cast<long long>(v.b(q)) * static_cast<long long>(d[q]);
            d[q] = (d[q] + v.a(q)) % static_cast<std::size_t>(p);
        }
        m(static_cast<Eigen::Index>(index_of(d, static_cast<std::size_t>(p))), static_cast<Eigen::Index>(col)) =
            root_power(p, zexp);
    }
    return m;
}

Eigen::MatrixXcd dense_gate(int p, std::size_t m, const Gate &g) {
    const std::size_t up = static_cast<std::size_t>(p);
    const std::size_t dim = ipow(up, m);
    const auto edim = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(edim, edim);
    std::visit(
        [&](const auto &gate) {
            using T = std::decay_t<decltype(gate)>;
            for (std::size_t col = 0; col < dim; ++col) {
                const auto d = digits_of(col, up, m);
                if constexpr (std::is_same_v<T, FourierGate> || std::is_same_v<T, FourierInvGate>) {
                    const long long sign = std::is_same_v<T, FourierGate> ? 1 : -1;
                    for (std::size_t b = 0; b < up; ++b) {
                        auto e = d;
                        e[gate.qudit] = b;
                        out(static_cast<Eigen::Index>(index_of(e, up)), static_cast<Eigen::Index>(col)) +=
                            root_power(p, sign * static_cast<long long>(d[gate.qudit] * b)) / std::sqrt(double(p));
                    }
                } else if constexpr (std::is_same_v<T, PhasePowGate>) {
                    // P = Z for odd p, sqrt(Z) = diag(1, i) for p = 2.
                    const long long j = static_cast<long long>(d[gate.qudit]);
                    const auto phase = p == 2 ? omega_power(2, gate.exponent * j) : root_power(p, gate.exponent * j);
                    out(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = phase;
                } else if constexpr (std::is_same_v<T, PauliGate>) {
                    const auto s = single_power(p, static_cast<int>(gate.a), static_cast<int>(gate.b), 1);
                    for (std::size_t r = 0; r < up; ++r) {
                        auto e = d;
                        e[gate.qudit] = r;
                        out(static_cast<Eigen::Index>(index_of(e, up)), static_cast<Eigen::Index>(col)) +=
                            s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(d[gate.qudit]));
                    }
                } else {
                    const long long j = static_cast<long long>(d[gate.control]);
                    const long long power = std::is_same_v<T, ControlledPauliInvGate> ? -j : j;
                    const auto s = single_power(p, static_cast<int>(gate.a), static_cast<int>(gate.b), power);
                    for (std::size_t r = 0; r < up; ++r) {
                        auto e = d;
                        e[gate.target] = r;
                        out(static_cast<Eigen::Index>(index_of(e, up)), static_cast<Eigen::Index>(col)) +=
                            s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(d[gate.target]));
                    }
                }
            }
        },
        g);
    return out;
}

Eigen::MatrixXcd dense_circuit(const Circuit &c) {
    const auto dim = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(c.p()), c.num_qudits()));
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &g : c.gates()) {
        u = dense_gate(c.p(), c.num_qudits(), g) * u;
    }
    return u;
}

Eigen::MatrixXcd dense_controlled_pauli(int p, std::size_t m, std::size_t control, const SymplecticVector &v) {
    const std::size_t up = static_cast<std::size_t>(p);
    const std::size_t dim = ipow(up, m);
    const auto edim = static_cast<Eigen::Index>(dim);
    // Embed M(v) on qudits 0..n-1 and raise it to the control value.
    std::vector<Eigen::MatrixXcd> powers;
    {
        FpVector a(m, 0), b(m, 0);
        for (std::size_t q = 0; q < v.n(); ++q) {
            a[q] = v.a(q);
            b[q] = v.b(q);
        }
        const Eigen::MatrixXcd full = dense_pauli(p, SymplecticVector(a, b));
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(edim, edim);
        for (std::size_t j = 0; j < up; ++j) {
            powers.push_back(acc);
            acc = full * acc;
        }
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(edim, edim);
    for (std::size_t col = 0; col < dim; ++col) {
        const auto j = digits_of(col, up, m)[control];
        for (std::size_t row = 0; row < dim; ++row) {
            if (digits_of(row, up, m)[control] == j) {
                out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                    powers[j](static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
            }
        }
    }
    return out;
}

Eigen::VectorXcd to_eigen(const std::vector<std::complex<double>> &amps) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = amps[i];
    }
    return v;
}

std::set<Vec> enumerate_span(int p, const std::vector<Vec> &gens, std::size_t len) {
    std::set<Vec> out;
    const std::size_t count = ipow(static_cast<std::size_t>(p), gens.size());
    for (std::size_t idx = 0; idx < count; ++idx) {
        Vec v(len, 0);
        std::size_t rest = idx;
        for (const auto &g : gens) {
            const int c = static_cast<int>(rest % static_cast<std::size_t>(p));
            rest /= static_cast<std::size_t>(p);
            for (std::size_t i = 0; i < len; ++i) {
                v[i] = (v[i] + c * g[i]) % p;
            }
        }
        out.insert(v);
    }
    return out;
}

Vec as_vec(const SymplecticVector &v) {
    return Vec(v.data().begin(), v.data().end());
}

std::vector<Vec> as_vecs(const std::vector<SymplecticVector> &vs) {
    std::vector<Vec> out;
    for (const auto &v : vs) {
        out.push_back(as_vec(v));
    }
    return out;
}

int symp(int p, const Vec &x, const Vec &y) {
    const std::size_t n = x.size() / 2;
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        s += static_cast<long long>(x[i]) * y[n + i] - static_cast<long long>(y[i]) * x[n + i];
    }
    s %= p;
    return static_cast<int>(s < 0 ? s + p : s);
}

std::set<Vec> brute_dual(int p, std::size_t n, const std::vector<Vec> &gens) {
    std::set<Vec> out;
    const std::size_t total = ipow(static_cast<std::size_t>(p), 2 * n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Vec v(2 * n);
        std::size_t rest = idx;
        for (auto &x : v) {
            x = static_cast<int>(rest % static_cast<std::size_t>(p));
            rest /= static_cast<std::size_t>(p);
        }
        bool ok = true;
        for (const auto &g : gens) {
            if (symp(p, g, v) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.insert(v);
        }
    }
    return out;
}

bool supported_on(const Vec &v, std::size_t n, const std::vector<std::size_t> &positions_1based) {
    for (std::size_t i = 0; i < n; ++i) {
        bool inside = false;
        for (auto q : positions_1based) {
            inside = inside || q == i + 1;
        }
        if (!inside && (v[i] != 0 || v[n + i] != 0)) {
            return false;
        }
    }
    return true;
}

bool brute_correctable(const StabilizerCodeSpec &spec, const std::vector<std::size_t> &jbar) {
    const int p = spec.field.p();
    const auto gens = as_vecs(spec.stabilizer.vectors());
    const auto c = enumerate_span(p, gens, 2 * spec.n);
    const auto cperp = brute_dual(p, spec.n, gens);
    for (const auto &v : cperp) {
        if (supported_on(v, spec.n, jbar) && !c.contains(v)) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto &&self, std::size_t start) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t> &j) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n; ++i) {
        bool in = false;
        for (auto x : j) {
            in = in || x == i;
        }
        if (!in) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace qss::testing
