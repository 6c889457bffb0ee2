#include "wlrec/reference.hpp"

#include <algorithm>
#include <initializer_list>

namespace wlrec {

namespace {

// Coefficients are listed highest power first, as printed.
ReferencePolynomial row(long n, long alpha, std::string beta, Rational prefactor,
                        std::initializer_list<const char*> descending) {
    ReferencePolynomial p{n, alpha, std::move(beta), std::move(prefactor), {}};
    for (const char* c : descending) {
        Rational q(c);
        q.canonicalize();
        p.coeffs.push_back(q);
    }
    std::reverse(p.coeffs.begin(), p.coeffs.end());
    return p;
}

Rational q(const char* text) {
    Rational out(text);
    out.canonicalize();
    return out;
}

}  // namespace

const std::vector<ReferencePolynomial>& reference_unrestricted() {
    static const std::vector<ReferencePolynomial> rows = {
        row(4, 3, "1/2", q("1/217945728000"),
            {"1", "72", "2520", "54768", "804384", "8297856", "60230016", "300174336", "958003200", "1490227200"}),
        row(3, 4, "1", q("1/464486400"), {"1", "40", "800", "10080", "85680", "504000", "2056320", "5322240", "6652800"}),
        row(5, 2, "2", q("1/17280"), {"1", "48", "960", "10320", "64800", "241920", "524160", "604800", "302400"}),
        row(3, 3, "4", q("16/1575"), {"4", "84", "735", "3360", "8400", "11340", "6615"}),
    };
    return rows;
}

const std::vector<ReferencePolynomial>& reference_fixed_trace() {
    static const std::vector<ReferencePolynomial> rows = {
        row(3, 4, "1/5", q("220712943321/305834375"),
            {"68397", "-122040", "74044", "-16200", "1998", "-2120", "1276", "-440", "77"}),
        row(4, 3, "1", q("-36480"),
            {"94976", "159488", "-288960", "197120", "-77728", "12768", "728", "-112", "-27", "-12"}),
        row(5, 2, "2", q("628320"), {"75355", "-92420", "29788", "4676", "-580", "-1234", "142", "22", "1"}),
        row(4, 3, "4", q("7238088"),
            {"3472", "-44528", "63564", "-53204", "23884", "-2940", "-749", "43", "27", "3"}),
    };
    return rows;
}

const std::vector<ReferencePolynomial>& reference_hyp1f1() {
    static const std::vector<ReferencePolynomial> rows = {
        row(3, 6, "1/3", Rational(1),
            {"1/6976704288153600", "1/64599113779200", "1/1009361152800", "5/107665189632", "367/215330379264",
             "17/337296960", "11731/9612963360", "1447/59339280", "2705/6781632", "265/51376", "49/988", "6/19", "1"}),
        row(4, 5, "1", Rational(1),
            {"1/83691159552000", "1/929901772800", "1/20664483840", "199/139485265920", "71/2324754432",
             "1321/2641766400", "487/75479040", "1/14976", "67/119808", "177/46592", "4857/232960", "1063/11648",
             "2705/8736", "10/13", "5/4", "1"}),
        row(5, 3, "2", Rational(1),
            {"1/508032000", "1/7056000", "13/2822400", "47/529200", "53/47040", "83/8400", "3091/50400", "19/70",
             "477/560", "13/7", "27/10", "12/5", "1"}),
        row(5, 4, "3", Rational(1),
            {"177147/25372857782272000", "59049/93282565376000", "177147/6663040384000", "911979/1332608076800",
             "160584849/13326080768000", "3846933/25049024000", "333153/227718400", "3888/366275",
             "118062279/1992536000", "9085527/35581000", "82863/97750", "42039/19550", "802359/195500", "2439/425",
             "666/119", "24/7", "1"}),
        row(7, 3, "4", Rational(1),
            {"64/488950811724375", "64/3621857864625", "304/278604451125", "3104/75983032125", "8252/7960127175",
             "68356/3618239625", "3881/15181425", "145856/55665225", "3856/187425", "8392/67473", "108502/187425",
             "5792/2805", "65860/11781", "24268/2145", "4567/273", "60512/3465", "256/21", "36/7", "1"}),
    };
    return rows;
}

std::vector<BigFloat> reference_kappa_beta_e() {
    const BigFloat e = const_e();
    const auto p = [&](long k) { return pow(e, k); };
    const BigFloat den = BigFloat(64L) * (e + BigFloat(1L)) * pow(e + BigFloat(2L), 2L) * (e + BigFloat(4L));
    std::vector<BigFloat> out = {
        BigFloat(192L) * p(3) + BigFloat(720L) * p(4) + BigFloat(960L) * p(5) + BigFloat(540L) * p(6) +
            BigFloat(108L) * p(7),
        BigFloat(192L) * p(4) + BigFloat(624L) * p(5) + BigFloat(648L) * p(6) + BigFloat(216L) * p(7),
        BigFloat(96L) * p(5) + BigFloat(240L) * p(6) + BigFloat(144L) * p(7),
        BigFloat(24L) * p(6) + BigFloat(36L) * p(7),
        BigFloat(3L) * p(7),
    };
    for (auto& v : out) v /= den;
    return out;
}

std::vector<BigFloat> reference_fixed_trace_beta_pi() {
    const BigFloat pi = const_pi();
    const BigFloat three_pi = BigFloat(3L) * pi;
    const BigFloat pre = BigFloat(9L) * (three_pi + BigFloat(2L)) * (three_pi + BigFloat(4L)) *
                         (three_pi + BigFloat(7L)) * (three_pi + BigFloat(8L)) /
                         (BigFloat(2L) * (pi + BigFloat(2L)) * (pi + BigFloat(4L)));
    std::vector<BigFloat> out = {
        pi + BigFloat(2L),
        BigFloat(-4L),
        BigFloat(8L) - BigFloat(6L) * pi,
        BigFloat(-36L),
        BigFloat(42L) + BigFloat(9L) * pi,
    };
    for (auto& v : out) v *= pre;
    return out;
}

std::vector<BigFloat> reference_hyp1f1_beta_5pi() {
    const BigFloat pi = const_pi();
    const auto p = [&](long k) { return pow(pi, k); };
    const BigFloat five_pi = BigFloat(5L) * pi;
    const BigFloat fifteen_pi = BigFloat(15L) * pi;
    const BigFloat den = BigFloat(4L) * (BigFloat(1L) + five_pi) * (BigFloat(2L) + five_pi) *
                         (BigFloat(2L) + fifteen_pi) * (BigFloat(4L) + fifteen_pi);
    std::vector<BigFloat> out = {
        BigFloat(22500L) * p(4) + BigFloat(22500L) * p(3) + BigFloat(64L) + BigFloat(1200L) * pi +
            BigFloat(8000L) * p(2),
        BigFloat(320L) * pi + BigFloat(5200L) * p(2) + BigFloat(27000L) * p(3) + BigFloat(45000L) * p(4),
        BigFloat(800L) * p(2) + BigFloat(10000L) * p(3) + BigFloat(30000L) * p(4),
        BigFloat(1000L) * p(3) + BigFloat(7500L) * p(4),
        BigFloat(625L) * p(4),
    };
    for (auto& v : out) v /= den;
    return out;
}

const std::vector<ReferenceHypValue>& reference_hyp1f1_values() {
    static const std::vector<ReferenceHypValue> rows = {
        {3, 6, "1/3", 10.0, 22.6555, 6}, {4, 5, "1", 5.0, 335.899, 6}, {5, 3, "2", 8.0, 87447.5, 6},
        {5, 4, "3", 2.0, 320.040, 6},    {7, 3, "4", 1.0, 72.2218, 6}, {3, 2, "5pi", 7.0, 203.910, 6},
    };
    return rows;
}

}  // namespace wlrec
