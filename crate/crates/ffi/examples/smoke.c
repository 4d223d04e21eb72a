/* Build: cargo build --release -p sejoin-ffi
 *        cc -I crates/ffi/include crates/ffi/examples/smoke.c \
 *           target/release/libsejoin_ffi.a -lpthread -ldl -lm -o smoke */
#include <stdio.h>

#include "sejoin.h"

int main(void) {
    SejoinJoin *join = NULL;
    if (sejoin_join_new("CP2", 15, 1, &join) != SEJOIN_STATUS_OK) {
        fprintf(stderr, "join: %s\n", sejoin_last_error_message());
        return 1;
    }
    uint64_t l1 = 0, l2 = 0;
    sejoin_join_indices(join, &l1, &l2);
    printf("CP2 * (15,1): l1=%llu l2=%llu\n", (unsigned long long)l1, (unsigned long long)l2);
    sejoin_join_free(join);

    SejoinFamily *family = NULL;
    if (sejoin_family_classify(6545, &family) != SEJOIN_STATUS_OK) {
        fprintf(stderr, "classify: %s\n", sejoin_last_error_message());
        return 1;
    }
    for (size_t i = 0; i < sejoin_family_len(family); i++) {
        SejoinFamilyMember m;
        sejoin_family_member(family, i, &m);
        printf("(%llu,%llu) class %lld\n", (unsigned long long)m.w1, (unsigned long long)m.w2,
               (long long)m.class_id);
    }
    sejoin_family_free(family);

    SejoinVerdict v;
    sejoin_homotopy_equivalent(155, 1, 31, 5, &v);
    printf("(155,1) vs (31,5): %s\n", v == SEJOIN_VERDICT_EQUIVALENT ? "equivalent" : "not equivalent");

    if (sejoin_join_new("CP2", 2, 2, &join) != SEJOIN_STATUS_INVALID_ARGUMENT) {
        return 1;
    }
    printf("rejected (2,2): %s\n", sejoin_last_error_message());
    return 0;
}
