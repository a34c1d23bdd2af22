/* Compiled as C11: proves the public header is usable from plain C. */
#include <math.h>
#include <stddef.h>

#include "zenossep/zenossep.h"

int capi_smoke_from_c(void) {
    zs_system* system = NULL;
    if (zs_system_create(3, NULL, 0.0, &system) != ZS_OK) return 1;
    if (zs_system_sites(system) != 3) return 2;
    if (zs_system_dim(system) != 8) return 3;

    double survival = 0.0;
    if (zs_zeno_survival(system, 1.0, 50, 1u, &survival) != ZS_OK) return 4;
    if (!(survival > 0.9 && survival <= 1.0)) return 5;

    double profile[3];
    if (zs_free_density(system, 1u, 0.0, profile) != ZS_OK) return 6;
    if (fabs(profile[0] - 1.0) > 1e-12) return 7;

    zs_system_destroy(system);
    return 0;
}
