#include "afrelay/config.hpp"
#include "afrelay/errors.hpp"

#include <map>

namespace afrelay {

namespace {

// Figure sweeps; gamma_th = 1 throughout (the reference curves are
// normalized to a 0 dB threshold).  Expansion orders and grid limits are
// tuned per link: the index series behind the analytic engines is
// asymptotic, so each preset ships the truncation that keeps the analytic
// curves within Monte Carlo resolution over its grid.
const std::map<std::string, std::string> kPresets = {
    {"fig2", R"(# three-hop homogeneous Nakagami link, m_n = n
[link]
gamma_th = 1

[[hop]]
family = nakagami
m = 1
theta = 1
rho = 1

[[hop]]
family = nakagami
m = 2
theta = 1
rho = 1

[[hop]]
family = nakagami
m = 3
theta = 1
rho = 1

[sweep]
start_db = 10
stop_db = 40
step_db = 2.5
engines = contour, residue, asymptotic_full, asymptotic_leading, monte_carlo

[mc]
trials = 10000000
seed = 20260826

[expansion]
orders = 5

[output]
path = fig2.csv
)"},
    {"fig3", R"(# three-hop Nakagami link with reversed shape ordering, m_n = N - n + 1
[link]
gamma_th = 1

[[hop]]
family = nakagami
m = 3
theta = 1
rho = 1

[[hop]]
family = nakagami
m = 2
theta = 1
rho = 1

[[hop]]
family = nakagami
m = 1
theta = 1
rho = 1

[sweep]
start_db = 10
stop_db = 40
step_db = 2.5
engines = contour, residue, asymptotic_full, asymptotic_leading, monte_carlo

[mc]
trials = 10000000
seed = 20260826

[expansion]
orders = 4

[output]
path = fig3.csv
)"},
    {"fig4", R"(# three-hop Nakagami link with a repeated minimum shape (m1 = m3 = 1)
[link]
gamma_th = 1

[[hop]]
family = nakagami
m = 1
theta = 3/2
rho = 1

[[hop]]
family = nakagami
m = 2
theta = 1
rho = 1/3

[[hop]]
family = nakagami
m = 1
theta = 1/2
rho = 5/3

[sweep]
start_db = 10
stop_db = 40
step_db = 2.5
engines = contour, residue, asymptotic_full, asymptotic_leading, monte_carlo

[mc]
trials = 10000000
seed = 20260826

[expansion]
orders = 4

[output]
path = fig4.csv
)"},
    {"fig5", R"(# five-hop Nakagami link, m = (5, 5, 2.5, 2.5, 1.5)
[link]
gamma_th = 1

[[hop]]
family = nakagami
m = 5
theta = 1
rho = 1

[[hop]]
family = nakagami
m = 5
theta = 1
rho = 1

[[hop]]
family = nakagami
m = 2.5
theta = 1
rho = 1

[[hop]]
family = nakagami
m = 2.5
theta = 1
rho = 1

[[hop]]
family = nakagami
m = 1.5
theta = 1
rho = 1

[sweep]
start_db = 17.5
stop_db = 40
step_db = 2.5
engines = contour, residue, asymptotic_full, asymptotic_leading, monte_carlo

[mc]
trials = 10000000
seed = 20260826

[expansion]
orders = 3

[output]
path = fig5.csv
)"},
    {"fig6", R"(# two-hop Weibull link, m = (1.5, 2)
# (the N = 2 curve of the Weibull family; the caption's stray "K_n = 2"
# has no Weibull meaning and is ignored)
[link]
gamma_th = 1

[[hop]]
family = weibull
m = 1.5
theta = 1
rho = 1

[[hop]]
family = weibull
m = 2
theta = 1
rho = 1

[sweep]
start_db = 10
stop_db = 40
step_db = 2.5
engines = contour, residue, asymptotic_full, asymptotic_leading, monte_carlo

[mc]
trials = 10000000
seed = 20260826

[expansion]
orders = 6

[output]
path = fig6.csv
)"},
    {"fig7", R"(# two-hop Rician link, K = (1, 3)
[link]
gamma_th = 1

[[hop]]
family = rician
k = 1
theta = 1
rho = 1

[[hop]]
family = rician
k = 3
theta = 1
rho = 1

[sweep]
start_db = 10
stop_db = 40
step_db = 2.5
engines = contour, residue, asymptotic_full, asymptotic_leading, monte_carlo

[mc]
trials = 10000000
seed = 20260826

[expansion]
orders = 6

[output]
path = fig7.csv
)"},
    {"fig8", R"(# two-hop Hoyt link, q = (3/4, 1/2)
[link]
gamma_th = 1

[[hop]]
family = hoyt
q = 3/4
theta = 1
rho = 1

[[hop]]
family = hoyt
q = 1/2
theta = 1
rho = 1

[sweep]
start_db = 10
stop_db = 40
step_db = 2.5
engines = contour, residue, asymptotic_full, asymptotic_leading, monte_carlo

[mc]
trials = 10000000
seed = 20260826

[expansion]
orders = 5

[output]
path = fig8.csv
)"},
    {"fig9", R"(# four-hop mixed link: Nakagami, Weibull, Rician, Hoyt
[link]
gamma_th = 1

[[hop]]
family = nakagami
m = 2
theta = 1/2
rho = 1

[[hop]]
family = weibull
m = 1.5
theta = 1
rho = 9/10

[[hop]]
family = rician
k = 3
theta = 3/2
rho = 4/5

[[hop]]
family = hoyt
q = 3/4
theta = 2
rho = 7/10

[sweep]
start_db = 17.5
stop_db = 40
step_db = 2.5
engines = contour, residue, asymptotic_full, asymptotic_leading, monte_carlo

[mc]
trials = 10000000
seed = 20260826

[expansion]
orders = 2

[output]
path = fig9.csv
)"},
};

} // namespace

const std::string& preset_text(const std::string& name)
{
    const auto it = kPresets.find(name);
    if (it == kPresets.end())
        throw config_error("unknown preset '" + name +
                           "' (have fig2 .. fig9)");
    return it->second;
}

std::vector<std::string> preset_names()
{
    std::vector<std::string> names;
    for (const auto& [name, text] : kPresets)
        names.push_back(name);
    return names;
}

} // namespace afrelay
