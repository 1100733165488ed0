#pragma once

#include <cmath>

namespace muskat {

// Bond data: Bo in the order-one regime, bo in the rescaled regime 1/Bo = sqrt(mu)/bo.
enum class BondRegime { OrderOne, Rescaled };

struct RegimeParams {
    double mu = 0.1;
    double eps = 1.0;
    BondRegime regime = BondRegime::OrderOne;
    double bond = 0.5;
    double nu = 0.0;
    bool stable = false;

    static RegimeParams order_one(double mu, double eps, double Bo, double nu = 0.0, bool stable = false) {
        return {mu, eps, BondRegime::OrderOne, Bo, nu, stable};
    }
    static RegimeParams rescaled(double mu, double eps, double bo, double nu = 0.0, bool stable = false) {
        return {mu, eps, BondRegime::Rescaled, bo, nu, stable};
    }

    // Coefficient of the capillary term: 1/Bo, or sqrt(mu)/bo when rescaled.
    double capillarity() const {
        return regime == BondRegime::OrderOne ? 1.0 / bond : std::sqrt(mu) / bond;
    }
    double effective_Bo() const { return 1.0 / capillarity(); }
    double gravity_sign() const { return stable ? -1.0 : 1.0; }

    // Throws ValidationError for mu, eps, bond or nu out of range.
    void validate_basic() const;
};

}  // namespace muskat
