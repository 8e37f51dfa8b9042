#pragma once

#include "pltopo/network.hpp"

namespace pltopo::testing {

inline Rational q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

inline AffineLayer hidden(Matrix w, Vec b)
{
    return {std::move(w), std::move(b), Activation::Relu};
}

inline AffineLayer output(Vec w, Rational b = 0)
{
    return {{std::move(w)}, {std::move(b)}, Activation::None};
}

/// sigma(x) + sigma(y).
inline Network n1()
{
    return Network({hidden({{q(1), q(0)}, {q(0), q(1)}}, {q(0), q(0)}), output({q(1), q(1)})});
}

/// Rows x, -y, 1 - x - y with the given output weights.
inline Network three_line(long a, long b, long c)
{
    return Network({hidden({{q(1), q(0)}, {q(0), q(-1)}, {q(-1), q(-1)}}, {q(0), q(0), q(1)}),
                    output({q(a), q(b), q(c)})});
}

/// sigma(x) on R^2.
inline Network single_relu()
{
    return Network({hidden({{q(1), q(0)}}, {q(0)}), output({q(1)})});
}

} // namespace pltopo::testing
