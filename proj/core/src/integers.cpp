#include "pretzel/integers.hpp"

#include "pretzel/errors.hpp"

namespace pretzel {

Integer fibonacci(long long n) {
    if (n < 0) {
        Integer f = fibonacci(-n);
        return (-n) % 2 == 0 ? -f : f; // F(-n) = (-1)^(n+1) F(n)
    }
    Integer a = 0, b = 1; // F(0), F(1)
    for (long long i = 0; i < n; ++i) {
        Integer next = a + b;
        a = b;
        b = next;
    }
    return a;
}

Integer pretzel_low_coefficient(long long p, long long q) {
    if (p % 2 == 0 || q % 2 == 0 || p == 1 || p == -1 || q == 1 || q == -1)
        throw ParameterError("pretzel_low_coefficient: p and q must be odd and not equal to +-1");
    return fibonacci(p + q + 1) + fibonacci(p + 1) * fibonacci(q + 1);
}

} // namespace pretzel
