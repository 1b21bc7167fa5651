"""Column layout shared by the batch kernels."""

FIELDS = (
    "ent_ppt",
    "duan",
    "e_ab",
    "e_ba",
    "g_ab_opt",
    "g_ba_opt",
    "g_sym_ab",
    "g_sym_ba",
    "ent_gain_sym_ab",
    "ent_gain_sym_ba",
    "d_plus",
    "d_minus",
    "d_minus_pt",
    "s_cond_ab",
    "h_cond_ab",
    "d_ab",
    "s_cond_ba",
    "h_cond_ba",
    "d_ba",
    "physical",
)
INDEX = {name: i for i, name in enumerate(FIELDS)}
