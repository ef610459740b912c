#include "pretzel/closed_forms.hpp"

#include <cstdlib>

#include "pretzel/integers.hpp"

namespace pretzel {

LaurentPoly1 torus2_z1(long long n) {
    LaurentPoly1 q;
    q.add_term({static_cast<int>(n - 1)}, fibonacci(n + 1));
    q.add_term({static_cast<int>(n + 1)}, -fibonacci(n - 1));
    return q;
}

SpanCertificate pretzel_z1_certificate(const PretzelParams& params) {
    params.validate();
    SpanCertificate cert;
    if (params.r > 0) {
        LaurentPoly1 comb;
        for (long long k = 1; k <= params.r; ++k)
            comb.add_term({static_cast<int>(2 * k - 1)}, 1);
        LaurentPoly1 a = comb * torus2_z1(params.p + params.q);
        LaurentPoly1 b = (torus2_z1(params.p) * torus2_z1(params.q))
                             .times_monomial({static_cast<int>(2 * params.r)});
        cert.qprime = a + b;
        cert.decomposition = {std::move(a), std::move(b)};
    } else {
        cert.qprime = invert_v(pretzel_z1_certificate(params.mirror()).qprime);
    }
    cert.span = v_span(cert.qprime);
    cert.lower_bound = mfw_lower_bound(cert.span);
    return cert;
}

int mfw_lower_bound(const VSpan& span) {
    return (span.hi - span.lo + 3) / 2; // ceil((hi - lo + 2) / 2)
}

} // namespace pretzel
