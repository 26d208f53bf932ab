#include "identgb/builtin.hpp"

#include <algorithm>
#include <map>

namespace identgb {

namespace {

const char* kGoodwin = R"(model goodwin
# Goodwin oscillator. Greek rates flattened to ASCII: alpha, beta, gamma,
# delta, sigma. All seven rate constants are declared even though the model
# is often described as six-parameter; the count discrepancy is inherited
# from the source description.
states x1, x2, x3, x4
params b, c, alpha, beta, gamma, delta, sigma
x1' = -b*x1 + 1/(c + x4)
x2' = alpha*x1 - beta*x2
x3' = gamma*x2 - delta*x3
x4' = sigma*x4*(gamma*x2 - delta*x3)/x3
output y1 = x1
)";

const char* kSeirp = R"(model seirp
# SEIRP epidemic model; alpha_e, alpha_i, kappa, rho, beta, mu are the
# Greek-letter rates.
states S, E, I, R, P
params alpha_e, alpha_i, kappa, rho, beta, mu
S' = -alpha_e*S*E - alpha_i*S*I
E' = alpha_e*S*E + alpha_i*S*I - kappa*E - rho*E
I' = kappa*E - beta*I - mu*I
R' = beta*I + rho*E
P' = mu*I
output y1 = I + S
)";

const char* kSeiqrdc = R"(model seiqrdc
# SEIQRDC epidemic model with an observed cumulative compartment C.
# Greek rates flattened: mu, alpha, beta, gamma, delta, lambda, kappa, tau.
# The recovered-compartment equation uses the mu*S term of the source
# description verbatim.
states S, E, I, Q, R, D, C
params mu, N, alpha, beta, gamma, delta, lambda, kappa, tau
S' = mu*N - alpha*S - beta*S*I*N - mu*S
E' = beta*S*I*N - mu*E - gamma*E
I' = gamma*E - delta*I - mu*I*S
Q' = delta*I - lambda*Q - kappa*Q - mu*Q
R' = lambda*Q - mu*S
D' = kappa*Q
C' = alpha*S - mu*C - tau*C
output y = C
)";

const char* kSirsForced = R"(model sirsforced
# SIRS model with an oscillating forcing term carried by x1, x2.
states S, I, R, x1, x2
params mu, g, nu, b0, b1, M
S' = mu - mu*S - b0*(1 + b1*x1)*I*S + g*R
I' = b0*(1 + b1*x1)*I*S - (nu + mu)*I
R' = nu*I - (mu + g)*R
x1' = -M*x2
x2' = M*x1
output y1 = I
output y2 = R
)";

const char* kSsaair = R"(model ssaair
# Six-compartment COVID model with distanced/normal susceptibles.
# eps_s, eps_a = epsilon_s, epsilon_a; beta_a, beta_i transmission rates;
# gamma_ai, gamma_ir progression rates.
states Sd, Sn, Ad, An, In, R
params eps_s, eps_a, beta_a, beta_i, h1, h2, gamma_ai, gamma_ir, f, delta
Sd' = -eps_s*beta_a*(An + eps_a*Ad)*Sd - h1*Sd + h2*Sn - eps_s*beta_i*Sd*In
Sn' = -beta_i*Sn*In - beta_a*(An + eps_a*Ad)*Sn + h1*Sd - h2*Sn
Ad' = eps_s*beta_i*Sd*In + eps_s*beta_a*(An + eps_a*Ad)*Sn + h2*An - gamma_ai*Ad - h1*Ad
An' = beta_i*Sn*In + beta_a*(An + eps_a*Ad)*Sn + h1*Ad - gamma_ai*An - h2*An
In' = f*gamma_ai*(Ad + An) - delta*In - gamma_ir*In
R' = (1 - f)*gamma_ai*(Ad + An) + gamma_ir*In
output y1 = Sd
output y2 = In
)";

const char* kPharm = R"(model pharm
# Glucose-oxidase pharmacokinetics; the two exchange rates a1 = a2 are
# merged into a single parameter a1.
states x1, x2, x3, x4
params a1, b1, b2, ka, kc, n
x1' = a1*(x2 - x1) - (ka*n*x1)/(kc*ka + kc*x3 + ka*x1)
x2' = a1*(x1 - x2)
x3' = b1*(x4 - x3) - (kc*n*x3)/(kc*ka + kc*x3 + ka*x1)
x4' = b2*(x3 - x4)
output y1 = x1
)";

const char* kSeir = R"(model seir
# SEIR model with demography; Lambda is the inflow, eps = epsilon.
states S, E, I, R
params Lambda, r, beta, N, eps, gamma, mu
S' = Lambda - r*beta*S*I/N - mu*S
E' = beta*S*I/N - eps*E - mu*E
I' = eps*E - gamma*I - mu*I
R' = gamma*I - mu*R
output y = I + R
)";

const char* kSeir2 = R"(model seir2
# Closed SEIR variant; eps = epsilon, rho the removal rate.
states S, E, I, R
params beta, eps, rho, mu, d
S' = -beta*S*I
E' = beta*S*I - eps*E
I' = eps*E - (rho + mu)*I
R' = rho*I - d*R
output y = I + R
)";

// NF-kB signalling pathway. The rate constants a1, a2, a3, c_1a, c_5a,
// c_1c, c_3c, c_2c, c1, c2, c3, c4, e_1a, kv are fixed to their standard
// numeric values (so they are not identifiability targets); the remaining
// rates stay symbolic. u is the stimulation input.
const char* kNfkb = R"(model nfkb
# fixed values used below: a1=1/2, a2=1/5, a3=1, c_1a=5/10000000,
# c_5a=1/10000, c_1c=5/10000000, c_3c=4/10000, c_2c=0, c1=5/10000000,
# c2=0, c3=4/10000, c4=1/2, e_1a=5/10000, kv=5
states x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12, x13, x14, x15
params kp, kd, k1, k2, k3, t1, t2, c_6a, i1, c5, c_4a, i_1a, c_2a, c_3a, e_2a
inputs u
x1' = kp - kd*x1 - k1*x1*u
x2' = -k3*x2 - kd*x2 - (1/5)*x2*x10 + t1*x4 - x2*x13 + t2*x5 + (k1*x1 - k2*x2*x8)*u
x3' = k3*x2 - kd*x3 + k2*x2*x8*u
x4' = (1/5)*x2*x10 - t1*x4
x5' = x2*x13 - t2*x5
x6' = c_6a*x13 - (1/2)*x6*x10 + t2*x5 - i1*x6
x7' = 5*i1*x6 - (1/2)*x11*x7
x8' = (1/2)*x9 - c5*x8
x9' = (5/10000000)*x7 - (4/10000)*x9
x10' = -(1/5)*x2*x10 - (1/2)*x10*x6 + c_4a*x12 - (1/10000)*x10 - i_1a*x10 + (5/10000)*x11
x11' = -(1/2)*x11*x7 + 5*i_1a*x10 - 5*(5/10000)*x11
x12' = c_2a + (5/10000000)*x7 - c_3a*x12
x13' = (1/2)*x10*x6 - c_6a*x13 - x2*x13 + e_2a*x14
x14' = (1/2)*x11*x7 - 5*e_2a*x14
x15' = (5/10000000)*x7 - (4/10000)*x15
output y1 = x2
output y2 = x10 + x13
output y3 = x9
output y4 = x1 + x2 + x3
output y5 = x7
output y6 = x12
)";

// Two-sex HPV transmission model. beta_XY_FM denotes transmission from
// female site X to male site Y (the coefficient appearing in the male
// equations); nu_OG_M is the male O->OG progression rate, and so on.
const char* kHpvCore = R"(states S_M, IO_M, IG_M, IOG_M, S_F, IO_F, IG_F, IOG_F
params mu, gamma_G_M, gamma_O_M, gamma_G_F, gamma_O_F, nu_GO_M, nu_OG_M, nu_GO_F, nu_OG_F, beta_OO_FM, beta_GO_FM, beta_OG_FM, beta_GG_FM, beta_OO_MF, beta_GO_MF, beta_OG_MF, beta_GG_MF
S_M' = mu/2 + gamma_G_M*IG_M + gamma_O_M*IO_M - S_M*mu - S_M*(beta_OO_FM*(IO_F + IOG_F) + beta_GO_FM*(IG_F + IOG_F)) - S_M*(beta_OG_FM*(IO_F + IOG_F) + beta_GG_FM*(IG_F + IOG_F))
IO_M' = S_M*(beta_OO_FM*(IO_F + IOG_F) + beta_GO_FM*(IG_F + IOG_F)) + gamma_G_M*IOG_M - IO_M*(nu_OG_M + gamma_O_M + mu + beta_OG_FM*(IO_F + IOG_F) + beta_GG_FM*(IG_F + IOG_F))
IG_M' = S_M*(beta_OG_FM*(IO_F + IOG_F) + beta_GG_FM*(IG_F + IOG_F)) + gamma_O_M*IOG_M - IG_M*(nu_GO_M + gamma_G_M + mu + beta_OO_FM*(IO_F + IOG_F) + beta_GO_FM*(IG_F + IOG_F))
IOG_M' = IO_M*(nu_OG_M + beta_OG_FM*(IO_F + IOG_F) + beta_GG_FM*(IG_F + IOG_F)) + IG_M*(nu_GO_M + beta_OO_FM*(IO_F + IOG_F) + beta_GO_FM*(IG_F + IOG_F)) - IOG_M*(gamma_O_M + gamma_G_M + mu)
S_F' = mu/2 + gamma_G_F*IG_F + gamma_O_F*IO_F - S_F*mu - S_F*(beta_OO_MF*(IO_M + IOG_M) + beta_GO_MF*(IG_M + IOG_M)) - S_F*(beta_OG_MF*(IO_M + IOG_M) + beta_GG_MF*(IG_M + IOG_M))
IO_F' = S_F*(beta_OO_MF*(IO_M + IOG_M) + beta_GO_MF*(IG_M + IOG_M)) + gamma_G_F*IOG_F - IO_F*(nu_OG_F + gamma_O_F + mu + beta_OG_MF*(IO_M + IOG_M) + beta_GG_MF*(IG_M + IOG_M))
IG_F' = S_F*(beta_OG_MF*(IO_M + IOG_M) + beta_GG_MF*(IG_M + IOG_M)) + gamma_O_F*IOG_F - IG_F*(nu_GO_F + gamma_G_F + mu + beta_OO_MF*(IO_M + IOG_M) + beta_GO_MF*(IG_M + IOG_M))
IOG_F' = IO_F*(nu_OG_F + beta_OG_MF*(IO_M + IOG_M) + beta_GG_MF*(IG_M + IOG_M)) + IG_F*(nu_GO_F + beta_OO_MF*(IO_M + IOG_M) + beta_GO_MF*(IG_M + IOG_M)) - IOG_F*(gamma_O_F + gamma_G_F + mu)
)";

const char* kSiraqj = R"(model siraqj
# SIRAQJ model with quarantined (Q) and isolated (J) compartments.
# eps_a, eps_q, eps_j = epsilon attenuation factors; d1..d6 exit rates.
states S, I, R, A, Q, J
params b, N, lambda, eps_a, eps_q, eps_j, d1, d2, d3, d4, d5, d6, k1, k2, g1, g2, mu1, mu2
S' = b*N - S*(I*lambda + lambda*Q*eps_a*eps_q + lambda*eps_a*A + lambda*eps_j*J + d1)
I' = k1*A - (g1 + mu2 + d2)*I
R' = g1*I + g2*J - d3*R
A' = S*(I*lambda + lambda*Q*eps_a*eps_q + lambda*eps_a*A + lambda*eps_j*J) - (k1 + mu1 + d4)*A
Q' = mu1*A - (k2 + d5)*Q
J' = k2*Q + mu2*I - (g2 + d6)*J
output y1 = Q
output y2 = J
)";

const char* kChemical = R"(model chemical
# Two-species reaction network: 2 X1 -> X2 (a), X2 -> 2 X1 (b), X2 -> 0 (c).
states x1, x2
params a, b, c
x1' = -a*x1^2 + 2*b*x2
x2' = a*x1^2 - b*x2 - c*x2
output y = x1
)";

const char* kExIntro = R"(model ex_intro
states x1, x2
params a, b, c
x1' = a*x1 + b*x2
x2' = c*x1
output y1 = x1
)";

const char* kExSian = R"(model ex_sian
states x
params a, c
x' = a*x + c^2
output y = x
)";

std::map<std::string, std::string> make_registry() {
    std::map<std::string, std::string> reg;
    reg["goodwin"] = kGoodwin;
    reg["seirp"] = kSeirp;
    reg["seiqrdc"] = kSeiqrdc;
    reg["sirsforced"] = kSirsForced;
    reg["ssaair"] = kSsaair;
    reg["pharm"] = kPharm;
    reg["seir"] = kSeir;
    reg["seir2"] = kSeir2;
    reg["nfkb"] = kNfkb;
    reg["siraqj"] = kSiraqj;
    reg["chemical"] = kChemical;
    reg["ex_intro"] = kExIntro;
    reg["ex_sian"] = kExSian;
    // HPV with the two studied output sets. Output set 1 observes the male
    // compartments plus the male dual infection; output set 2 observes the
    // single-site infections of both sexes.
    reg["hpv1"] = std::string("model hpv1\n") + kHpvCore +
                  "output y1 = IG_M + IOG_M\noutput y2 = IO_M + IOG_M\noutput y3 = IOG_M\n";
    reg["hpv2"] = std::string("model hpv2\n") + kHpvCore +
                  "output y1 = IG_M + IOG_M\noutput y2 = IO_M + IOG_M\noutput y3 = IG_F + IOG_F\noutput y4 = IO_F + IOG_F\n";
    return reg;
}

const std::map<std::string, std::string>& registry() {
    static const std::map<std::string, std::string> reg = make_registry();
    return reg;
}

} // namespace

std::vector<std::string> builtin_model_names() {
    std::vector<std::string> out = light_tier_names();
    for (const auto& [name, text] : registry())
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    return out;
}

std::vector<std::string> light_tier_names() {
    return {"chemical", "seir", "seir2", "seirp", "ex_intro", "ex_sian", "goodwin"};
}

bool is_builtin_model(const std::string& name) { return registry().count(name) != 0; }

const std::string& builtin_model_text(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw parse_error("unknown builtin model '" + name + "'");
    return it->second;
}

Model builtin_model(const std::string& name) { return parse_model(builtin_model_text(name)); }

std::vector<Model> builtin_models() {
    std::vector<Model> out;
    for (const std::string& name : builtin_model_names()) out.push_back(builtin_model(name));
    return out;
}

std::string jason210_system_text() {
    return "# system: jason210\n"
           "# prime: 11863279\n"
           "# variables: x1, x2, x3, x4, x5, x6, x7, x8\n"
           "x1^2*x3^4 + x1*x2*x3^2*x5^2 + x1*x2*x3*x4*x5*x7 + x1*x2*x3*x4*x6*x8 + x1*x2*x4^2*x6^2 + x2^2*x4^4\n"
           "x2^6\n"
           "x1^6\n";
}

} // namespace identgb
