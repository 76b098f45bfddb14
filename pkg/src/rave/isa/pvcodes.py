"""Frozen visualization codes for every vector and vsetvl mnemonic.

Generated by tools/gen_pvcodes.py; do not edit by hand. Codes start at 10,
assigned in lexicographic mnemonic order per decoder version, so trace files
stay comparable across runs. All scalar instructions share SCALAR_CODE.
"""

SCALAR_CODE = 1
FIRST_MNEMONIC_CODE = 10

PV_CODES: dict[str, dict[str, int]] = {
    "v0.7.1": {
        "vaadd.vi": 10,
        "vaadd.vv": 11,
        "vaadd.vx": 12,
        "vadc.vim": 13,
        "vadc.vvm": 14,
        "vadc.vxm": 15,
        "vadd.vi": 16,
        "vadd.vv": 17,
        "vadd.vx": 18,
        "vand.vi": 19,
        "vand.vv": 20,
        "vand.vx": 21,
        "vasub.vv": 22,
        "vasub.vx": 23,
        "vcompress.vm": 24,
        "vdiv.vv": 25,
        "vdiv.vx": 26,
        "vdivu.vv": 27,
        "vdivu.vx": 28,
        "vext.x.v": 29,
        "vfadd.vf": 30,
        "vfadd.vv": 31,
        "vfclass.v": 32,
        "vfcvt.f.x.v": 33,
        "vfcvt.f.xu.v": 34,
        "vfcvt.x.f.v": 35,
        "vfcvt.xu.f.v": 36,
        "vfdiv.vf": 37,
        "vfdiv.vv": 38,
        "vfmacc.vf": 39,
        "vfmacc.vv": 40,
        "vfmadd.vf": 41,
        "vfmadd.vv": 42,
        "vfmax.vf": 43,
        "vfmax.vv": 44,
        "vfmerge.vfm": 45,
        "vfmin.vf": 46,
        "vfmin.vv": 47,
        "vfmsac.vf": 48,
        "vfmsac.vv": 49,
        "vfmsub.vf": 50,
        "vfmsub.vv": 51,
        "vfmul.vf": 52,
        "vfmul.vv": 53,
        "vfmv.f.s": 54,
        "vfmv.s.f": 55,
        "vfmv.v.f": 56,
        "vfncvt.f.f.v": 57,
        "vfncvt.f.x.v": 58,
        "vfncvt.f.xu.v": 59,
        "vfncvt.x.f.v": 60,
        "vfncvt.xu.f.v": 61,
        "vfnmacc.vf": 62,
        "vfnmacc.vv": 63,
        "vfnmadd.vf": 64,
        "vfnmadd.vv": 65,
        "vfnmsac.vf": 66,
        "vfnmsac.vv": 67,
        "vfnmsub.vf": 68,
        "vfnmsub.vv": 69,
        "vfrdiv.vf": 70,
        "vfredmax.vs": 71,
        "vfredmin.vs": 72,
        "vfredosum.vs": 73,
        "vfredsum.vs": 74,
        "vfrsub.vf": 75,
        "vfsgnj.vf": 76,
        "vfsgnj.vv": 77,
        "vfsgnjn.vf": 78,
        "vfsgnjn.vv": 79,
        "vfsgnjx.vf": 80,
        "vfsgnjx.vv": 81,
        "vfsqrt.v": 82,
        "vfsub.vf": 83,
        "vfsub.vv": 84,
        "vfwadd.vf": 85,
        "vfwadd.vv": 86,
        "vfwadd.wf": 87,
        "vfwadd.wv": 88,
        "vfwcvt.f.f.v": 89,
        "vfwcvt.f.x.v": 90,
        "vfwcvt.f.xu.v": 91,
        "vfwcvt.x.f.v": 92,
        "vfwcvt.xu.f.v": 93,
        "vfwmacc.vf": 94,
        "vfwmacc.vv": 95,
        "vfwmsac.vf": 96,
        "vfwmsac.vv": 97,
        "vfwmul.vf": 98,
        "vfwmul.vv": 99,
        "vfwnmacc.vf": 100,
        "vfwnmacc.vv": 101,
        "vfwnmsac.vf": 102,
        "vfwnmsac.vv": 103,
        "vfwredosum.vs": 104,
        "vfwredsum.vs": 105,
        "vfwsub.vf": 106,
        "vfwsub.vv": 107,
        "vfwsub.wf": 108,
        "vfwsub.wv": 109,
        "vid.v": 110,
        "viota.m": 111,
        "vlb.v": 112,
        "vlbff.v": 113,
        "vlbu.v": 114,
        "vlbuff.v": 115,
        "vle.v": 116,
        "vleff.v": 117,
        "vlh.v": 118,
        "vlhff.v": 119,
        "vlhu.v": 120,
        "vlhuff.v": 121,
        "vlsb.v": 122,
        "vlsbu.v": 123,
        "vlse.v": 124,
        "vlseg2b.v": 125,
        "vlseg2bff.v": 126,
        "vlseg2bu.v": 127,
        "vlseg2buff.v": 128,
        "vlseg2e.v": 129,
        "vlseg2eff.v": 130,
        "vlseg2h.v": 131,
        "vlseg2hff.v": 132,
        "vlseg2hu.v": 133,
        "vlseg2huff.v": 134,
        "vlseg2w.v": 135,
        "vlseg2wff.v": 136,
        "vlseg2wu.v": 137,
        "vlseg2wuff.v": 138,
        "vlseg3b.v": 139,
        "vlseg3bff.v": 140,
        "vlseg3bu.v": 141,
        "vlseg3buff.v": 142,
        "vlseg3e.v": 143,
        "vlseg3eff.v": 144,
        "vlseg3h.v": 145,
        "vlseg3hff.v": 146,
        "vlseg3hu.v": 147,
        "vlseg3huff.v": 148,
        "vlseg3w.v": 149,
        "vlseg3wff.v": 150,
        "vlseg3wu.v": 151,
        "vlseg3wuff.v": 152,
        "vlseg4b.v": 153,
        "vlseg4bff.v": 154,
        "vlseg4bu.v": 155,
        "vlseg4buff.v": 156,
        "vlseg4e.v": 157,
        "vlseg4eff.v": 158,
        "vlseg4h.v": 159,
        "vlseg4hff.v": 160,
        "vlseg4hu.v": 161,
        "vlseg4huff.v": 162,
        "vlseg4w.v": 163,
        "vlseg4wff.v": 164,
        "vlseg4wu.v": 165,
        "vlseg4wuff.v": 166,
        "vlseg5b.v": 167,
        "vlseg5bff.v": 168,
        "vlseg5bu.v": 169,
        "vlseg5buff.v": 170,
        "vlseg5e.v": 171,
        "vlseg5eff.v": 172,
        "vlseg5h.v": 173,
        "vlseg5hff.v": 174,
        "vlseg5hu.v": 175,
        "vlseg5huff.v": 176,
        "vlseg5w.v": 177,
        "vlseg5wff.v": 178,
        "vlseg5wu.v": 179,
        "vlseg5wuff.v": 180,
        "vlseg6b.v": 181,
        "vlseg6bff.v": 182,
        "vlseg6bu.v": 183,
        "vlseg6buff.v": 184,
        "vlseg6e.v": 185,
        "vlseg6eff.v": 186,
        "vlseg6h.v": 187,
        "vlseg6hff.v": 188,
        "vlseg6hu.v": 189,
        "vlseg6huff.v": 190,
        "vlseg6w.v": 191,
        "vlseg6wff.v": 192,
        "vlseg6wu.v": 193,
        "vlseg6wuff.v": 194,
        "vlseg7b.v": 195,
        "vlseg7bff.v": 196,
        "vlseg7bu.v": 197,
        "vlseg7buff.v": 198,
        "vlseg7e.v": 199,
        "vlseg7eff.v": 200,
        "vlseg7h.v": 201,
        "vlseg7hff.v": 202,
        "vlseg7hu.v": 203,
        "vlseg7huff.v": 204,
        "vlseg7w.v": 205,
        "vlseg7wff.v": 206,
        "vlseg7wu.v": 207,
        "vlseg7wuff.v": 208,
        "vlseg8b.v": 209,
        "vlseg8bff.v": 210,
        "vlseg8bu.v": 211,
        "vlseg8buff.v": 212,
        "vlseg8e.v": 213,
        "vlseg8eff.v": 214,
        "vlseg8h.v": 215,
        "vlseg8hff.v": 216,
        "vlseg8hu.v": 217,
        "vlseg8huff.v": 218,
        "vlseg8w.v": 219,
        "vlseg8wff.v": 220,
        "vlseg8wu.v": 221,
        "vlseg8wuff.v": 222,
        "vlsh.v": 223,
        "vlshu.v": 224,
        "vlsseg2b.v": 225,
        "vlsseg2bu.v": 226,
        "vlsseg2e.v": 227,
        "vlsseg2h.v": 228,
        "vlsseg2hu.v": 229,
        "vlsseg2w.v": 230,
        "vlsseg2wu.v": 231,
        "vlsseg3b.v": 232,
        "vlsseg3bu.v": 233,
        "vlsseg3e.v": 234,
        "vlsseg3h.v": 235,
        "vlsseg3hu.v": 236,
        "vlsseg3w.v": 237,
        "vlsseg3wu.v": 238,
        "vlsseg4b.v": 239,
        "vlsseg4bu.v": 240,
        "vlsseg4e.v": 241,
        "vlsseg4h.v": 242,
        "vlsseg4hu.v": 243,
        "vlsseg4w.v": 244,
        "vlsseg4wu.v": 245,
        "vlsseg5b.v": 246,
        "vlsseg5bu.v": 247,
        "vlsseg5e.v": 248,
        "vlsseg5h.v": 249,
        "vlsseg5hu.v": 250,
        "vlsseg5w.v": 251,
        "vlsseg5wu.v": 252,
        "vlsseg6b.v": 253,
        "vlsseg6bu.v": 254,
        "vlsseg6e.v": 255,
        "vlsseg6h.v": 256,
        "vlsseg6hu.v": 257,
        "vlsseg6w.v": 258,
        "vlsseg6wu.v": 259,
        "vlsseg7b.v": 260,
        "vlsseg7bu.v": 261,
        "vlsseg7e.v": 262,
        "vlsseg7h.v": 263,
        "vlsseg7hu.v": 264,
        "vlsseg7w.v": 265,
        "vlsseg7wu.v": 266,
        "vlsseg8b.v": 267,
        "vlsseg8bu.v": 268,
        "vlsseg8e.v": 269,
        "vlsseg8h.v": 270,
        "vlsseg8hu.v": 271,
        "vlsseg8w.v": 272,
        "vlsseg8wu.v": 273,
        "vlsw.v": 274,
        "vlswu.v": 275,
        "vlw.v": 276,
        "vlwff.v": 277,
        "vlwu.v": 278,
        "vlwuff.v": 279,
        "vlxb.v": 280,
        "vlxbu.v": 281,
        "vlxe.v": 282,
        "vlxh.v": 283,
        "vlxhu.v": 284,
        "vlxseg2b.v": 285,
        "vlxseg2bu.v": 286,
        "vlxseg2e.v": 287,
        "vlxseg2h.v": 288,
        "vlxseg2hu.v": 289,
        "vlxseg2w.v": 290,
        "vlxseg2wu.v": 291,
        "vlxseg3b.v": 292,
        "vlxseg3bu.v": 293,
        "vlxseg3e.v": 294,
        "vlxseg3h.v": 295,
        "vlxseg3hu.v": 296,
        "vlxseg3w.v": 297,
        "vlxseg3wu.v": 298,
        "vlxseg4b.v": 299,
        "vlxseg4bu.v": 300,
        "vlxseg4e.v": 301,
        "vlxseg4h.v": 302,
        "vlxseg4hu.v": 303,
        "vlxseg4w.v": 304,
        "vlxseg4wu.v": 305,
        "vlxseg5b.v": 306,
        "vlxseg5bu.v": 307,
        "vlxseg5e.v": 308,
        "vlxseg5h.v": 309,
        "vlxseg5hu.v": 310,
        "vlxseg5w.v": 311,
        "vlxseg5wu.v": 312,
        "vlxseg6b.v": 313,
        "vlxseg6bu.v": 314,
        "vlxseg6e.v": 315,
        "vlxseg6h.v": 316,
        "vlxseg6hu.v": 317,
        "vlxseg6w.v": 318,
        "vlxseg6wu.v": 319,
        "vlxseg7b.v": 320,
        "vlxseg7bu.v": 321,
        "vlxseg7e.v": 322,
        "vlxseg7h.v": 323,
        "vlxseg7hu.v": 324,
        "vlxseg7w.v": 325,
        "vlxseg7wu.v": 326,
        "vlxseg8b.v": 327,
        "vlxseg8bu.v": 328,
        "vlxseg8e.v": 329,
        "vlxseg8h.v": 330,
        "vlxseg8hu.v": 331,
        "vlxseg8w.v": 332,
        "vlxseg8wu.v": 333,
        "vlxw.v": 334,
        "vlxwu.v": 335,
        "vmacc.vv": 336,
        "vmacc.vx": 337,
        "vmadc.vim": 338,
        "vmadc.vvm": 339,
        "vmadc.vxm": 340,
        "vmadd.vv": 341,
        "vmadd.vx": 342,
        "vmand.mm": 343,
        "vmandnot.mm": 344,
        "vmax.vv": 345,
        "vmax.vx": 346,
        "vmaxu.vv": 347,
        "vmaxu.vx": 348,
        "vmerge.vim": 349,
        "vmerge.vvm": 350,
        "vmerge.vxm": 351,
        "vmfeq.vf": 352,
        "vmfeq.vv": 353,
        "vmfge.vf": 354,
        "vmfgt.vf": 355,
        "vmfirst.m": 356,
        "vmfle.vf": 357,
        "vmfle.vv": 358,
        "vmflt.vf": 359,
        "vmflt.vv": 360,
        "vmfne.vf": 361,
        "vmfne.vv": 362,
        "vmford.vf": 363,
        "vmford.vv": 364,
        "vmin.vv": 365,
        "vmin.vx": 366,
        "vminu.vv": 367,
        "vminu.vx": 368,
        "vmnand.mm": 369,
        "vmnor.mm": 370,
        "vmor.mm": 371,
        "vmornot.mm": 372,
        "vmpopc.m": 373,
        "vmsbc.vvm": 374,
        "vmsbc.vxm": 375,
        "vmsbf.m": 376,
        "vmseq.vi": 377,
        "vmseq.vv": 378,
        "vmseq.vx": 379,
        "vmsgt.vi": 380,
        "vmsgt.vx": 381,
        "vmsgtu.vi": 382,
        "vmsgtu.vx": 383,
        "vmsif.m": 384,
        "vmsle.vi": 385,
        "vmsle.vv": 386,
        "vmsle.vx": 387,
        "vmsleu.vi": 388,
        "vmsleu.vv": 389,
        "vmsleu.vx": 390,
        "vmslt.vv": 391,
        "vmslt.vx": 392,
        "vmsltu.vv": 393,
        "vmsltu.vx": 394,
        "vmsne.vi": 395,
        "vmsne.vv": 396,
        "vmsne.vx": 397,
        "vmsof.m": 398,
        "vmul.vv": 399,
        "vmul.vx": 400,
        "vmulh.vv": 401,
        "vmulh.vx": 402,
        "vmulhsu.vv": 403,
        "vmulhsu.vx": 404,
        "vmulhu.vv": 405,
        "vmulhu.vx": 406,
        "vmv.s.x": 407,
        "vmv.v.i": 408,
        "vmv.v.v": 409,
        "vmv.v.x": 410,
        "vmxnor.mm": 411,
        "vmxor.mm": 412,
        "vnclip.vi": 413,
        "vnclip.vv": 414,
        "vnclip.vx": 415,
        "vnclipu.vi": 416,
        "vnclipu.vv": 417,
        "vnclipu.vx": 418,
        "vnmsac.vv": 419,
        "vnmsac.vx": 420,
        "vnmsub.vv": 421,
        "vnmsub.vx": 422,
        "vnsra.vi": 423,
        "vnsra.vv": 424,
        "vnsra.vx": 425,
        "vnsrl.vi": 426,
        "vnsrl.vv": 427,
        "vnsrl.vx": 428,
        "vor.vi": 429,
        "vor.vv": 430,
        "vor.vx": 431,
        "vredand.vs": 432,
        "vredmax.vs": 433,
        "vredmaxu.vs": 434,
        "vredmin.vs": 435,
        "vredminu.vs": 436,
        "vredor.vs": 437,
        "vredsum.vs": 438,
        "vredxor.vs": 439,
        "vrem.vv": 440,
        "vrem.vx": 441,
        "vremu.vv": 442,
        "vremu.vx": 443,
        "vrgather.vi": 444,
        "vrgather.vv": 445,
        "vrgather.vx": 446,
        "vrsub.vi": 447,
        "vrsub.vx": 448,
        "vsadd.vi": 449,
        "vsadd.vv": 450,
        "vsadd.vx": 451,
        "vsaddu.vi": 452,
        "vsaddu.vv": 453,
        "vsaddu.vx": 454,
        "vsb.v": 455,
        "vsbc.vvm": 456,
        "vsbc.vxm": 457,
        "vse.v": 458,
        "vsetvl": 459,
        "vsetvli": 460,
        "vsh.v": 461,
        "vslide1down.vx": 462,
        "vslide1up.vx": 463,
        "vslidedown.vi": 464,
        "vslidedown.vx": 465,
        "vslideup.vi": 466,
        "vslideup.vx": 467,
        "vsll.vi": 468,
        "vsll.vv": 469,
        "vsll.vx": 470,
        "vsmul.vv": 471,
        "vsmul.vx": 472,
        "vsra.vi": 473,
        "vsra.vv": 474,
        "vsra.vx": 475,
        "vsrl.vi": 476,
        "vsrl.vv": 477,
        "vsrl.vx": 478,
        "vssb.v": 479,
        "vsse.v": 480,
        "vsseg2b.v": 481,
        "vsseg2e.v": 482,
        "vsseg2h.v": 483,
        "vsseg2w.v": 484,
        "vsseg3b.v": 485,
        "vsseg3e.v": 486,
        "vsseg3h.v": 487,
        "vsseg3w.v": 488,
        "vsseg4b.v": 489,
        "vsseg4e.v": 490,
        "vsseg4h.v": 491,
        "vsseg4w.v": 492,
        "vsseg5b.v": 493,
        "vsseg5e.v": 494,
        "vsseg5h.v": 495,
        "vsseg5w.v": 496,
        "vsseg6b.v": 497,
        "vsseg6e.v": 498,
        "vsseg6h.v": 499,
        "vsseg6w.v": 500,
        "vsseg7b.v": 501,
        "vsseg7e.v": 502,
        "vsseg7h.v": 503,
        "vsseg7w.v": 504,
        "vsseg8b.v": 505,
        "vsseg8e.v": 506,
        "vsseg8h.v": 507,
        "vsseg8w.v": 508,
        "vssh.v": 509,
        "vssra.vi": 510,
        "vssra.vv": 511,
        "vssra.vx": 512,
        "vssrl.vi": 513,
        "vssrl.vv": 514,
        "vssrl.vx": 515,
        "vssseg2b.v": 516,
        "vssseg2e.v": 517,
        "vssseg2h.v": 518,
        "vssseg2w.v": 519,
        "vssseg3b.v": 520,
        "vssseg3e.v": 521,
        "vssseg3h.v": 522,
        "vssseg3w.v": 523,
        "vssseg4b.v": 524,
        "vssseg4e.v": 525,
        "vssseg4h.v": 526,
        "vssseg4w.v": 527,
        "vssseg5b.v": 528,
        "vssseg5e.v": 529,
        "vssseg5h.v": 530,
        "vssseg5w.v": 531,
        "vssseg6b.v": 532,
        "vssseg6e.v": 533,
        "vssseg6h.v": 534,
        "vssseg6w.v": 535,
        "vssseg7b.v": 536,
        "vssseg7e.v": 537,
        "vssseg7h.v": 538,
        "vssseg7w.v": 539,
        "vssseg8b.v": 540,
        "vssseg8e.v": 541,
        "vssseg8h.v": 542,
        "vssseg8w.v": 543,
        "vssub.vv": 544,
        "vssub.vx": 545,
        "vssubu.vv": 546,
        "vssubu.vx": 547,
        "vssw.v": 548,
        "vsub.vv": 549,
        "vsub.vx": 550,
        "vsuxb.v": 551,
        "vsuxe.v": 552,
        "vsuxh.v": 553,
        "vsuxseg2b.v": 554,
        "vsuxseg2e.v": 555,
        "vsuxseg2h.v": 556,
        "vsuxseg2w.v": 557,
        "vsuxseg3b.v": 558,
        "vsuxseg3e.v": 559,
        "vsuxseg3h.v": 560,
        "vsuxseg3w.v": 561,
        "vsuxseg4b.v": 562,
        "vsuxseg4e.v": 563,
        "vsuxseg4h.v": 564,
        "vsuxseg4w.v": 565,
        "vsuxseg5b.v": 566,
        "vsuxseg5e.v": 567,
        "vsuxseg5h.v": 568,
        "vsuxseg5w.v": 569,
        "vsuxseg6b.v": 570,
        "vsuxseg6e.v": 571,
        "vsuxseg6h.v": 572,
        "vsuxseg6w.v": 573,
        "vsuxseg7b.v": 574,
        "vsuxseg7e.v": 575,
        "vsuxseg7h.v": 576,
        "vsuxseg7w.v": 577,
        "vsuxseg8b.v": 578,
        "vsuxseg8e.v": 579,
        "vsuxseg8h.v": 580,
        "vsuxseg8w.v": 581,
        "vsuxw.v": 582,
        "vsw.v": 583,
        "vsxb.v": 584,
        "vsxe.v": 585,
        "vsxh.v": 586,
        "vsxseg2b.v": 587,
        "vsxseg2e.v": 588,
        "vsxseg2h.v": 589,
        "vsxseg2w.v": 590,
        "vsxseg3b.v": 591,
        "vsxseg3e.v": 592,
        "vsxseg3h.v": 593,
        "vsxseg3w.v": 594,
        "vsxseg4b.v": 595,
        "vsxseg4e.v": 596,
        "vsxseg4h.v": 597,
        "vsxseg4w.v": 598,
        "vsxseg5b.v": 599,
        "vsxseg5e.v": 600,
        "vsxseg5h.v": 601,
        "vsxseg5w.v": 602,
        "vsxseg6b.v": 603,
        "vsxseg6e.v": 604,
        "vsxseg6h.v": 605,
        "vsxseg6w.v": 606,
        "vsxseg7b.v": 607,
        "vsxseg7e.v": 608,
        "vsxseg7h.v": 609,
        "vsxseg7w.v": 610,
        "vsxseg8b.v": 611,
        "vsxseg8e.v": 612,
        "vsxseg8h.v": 613,
        "vsxseg8w.v": 614,
        "vsxw.v": 615,
        "vwadd.vv": 616,
        "vwadd.vx": 617,
        "vwadd.wv": 618,
        "vwadd.wx": 619,
        "vwaddu.vv": 620,
        "vwaddu.vx": 621,
        "vwaddu.wv": 622,
        "vwaddu.wx": 623,
        "vwmacc.vv": 624,
        "vwmacc.vx": 625,
        "vwmaccsu.vv": 626,
        "vwmaccsu.vx": 627,
        "vwmaccu.vv": 628,
        "vwmaccu.vx": 629,
        "vwmaccus.vx": 630,
        "vwmul.vv": 631,
        "vwmul.vx": 632,
        "vwmulsu.vv": 633,
        "vwmulsu.vx": 634,
        "vwmulu.vv": 635,
        "vwmulu.vx": 636,
        "vwredsum.vs": 637,
        "vwredsumu.vs": 638,
        "vwsmacc.vv": 639,
        "vwsmacc.vx": 640,
        "vwsmaccsu.vv": 641,
        "vwsmaccsu.vx": 642,
        "vwsmaccu.vv": 643,
        "vwsmaccu.vx": 644,
        "vwsmaccus.vx": 645,
        "vwsub.vv": 646,
        "vwsub.vx": 647,
        "vwsub.wv": 648,
        "vwsub.wx": 649,
        "vwsubu.vv": 650,
        "vwsubu.vx": 651,
        "vwsubu.wv": 652,
        "vwsubu.wx": 653,
        "vxor.vi": 654,
        "vxor.vv": 655,
        "vxor.vx": 656,
    },
    "v1.0": {
        "vaadd.vv": 10,
        "vaadd.vx": 11,
        "vaaddu.vv": 12,
        "vaaddu.vx": 13,
        "vadc.vim": 14,
        "vadc.vvm": 15,
        "vadc.vxm": 16,
        "vadd.vi": 17,
        "vadd.vv": 18,
        "vadd.vx": 19,
        "vand.vi": 20,
        "vand.vv": 21,
        "vand.vx": 22,
        "vasub.vv": 23,
        "vasub.vx": 24,
        "vasubu.vv": 25,
        "vasubu.vx": 26,
        "vcompress.vm": 27,
        "vcpop.m": 28,
        "vdiv.vv": 29,
        "vdiv.vx": 30,
        "vdivu.vv": 31,
        "vdivu.vx": 32,
        "vfadd.vf": 33,
        "vfadd.vv": 34,
        "vfclass.v": 35,
        "vfcvt.f.x.v": 36,
        "vfcvt.f.xu.v": 37,
        "vfcvt.rtz.x.f.v": 38,
        "vfcvt.rtz.xu.f.v": 39,
        "vfcvt.x.f.v": 40,
        "vfcvt.xu.f.v": 41,
        "vfdiv.vf": 42,
        "vfdiv.vv": 43,
        "vfirst.m": 44,
        "vfmacc.vf": 45,
        "vfmacc.vv": 46,
        "vfmadd.vf": 47,
        "vfmadd.vv": 48,
        "vfmax.vf": 49,
        "vfmax.vv": 50,
        "vfmerge.vfm": 51,
        "vfmin.vf": 52,
        "vfmin.vv": 53,
        "vfmsac.vf": 54,
        "vfmsac.vv": 55,
        "vfmsub.vf": 56,
        "vfmsub.vv": 57,
        "vfmul.vf": 58,
        "vfmul.vv": 59,
        "vfmv.f.s": 60,
        "vfmv.s.f": 61,
        "vfmv.v.f": 62,
        "vfncvt.f.f.w": 63,
        "vfncvt.f.x.w": 64,
        "vfncvt.f.xu.w": 65,
        "vfncvt.rod.f.f.w": 66,
        "vfncvt.rtz.x.f.w": 67,
        "vfncvt.rtz.xu.f.w": 68,
        "vfncvt.x.f.w": 69,
        "vfncvt.xu.f.w": 70,
        "vfnmacc.vf": 71,
        "vfnmacc.vv": 72,
        "vfnmadd.vf": 73,
        "vfnmadd.vv": 74,
        "vfnmsac.vf": 75,
        "vfnmsac.vv": 76,
        "vfnmsub.vf": 77,
        "vfnmsub.vv": 78,
        "vfrdiv.vf": 79,
        "vfrec7.v": 80,
        "vfredmax.vs": 81,
        "vfredmin.vs": 82,
        "vfredosum.vs": 83,
        "vfredusum.vs": 84,
        "vfrsqrt7.v": 85,
        "vfrsub.vf": 86,
        "vfsgnj.vf": 87,
        "vfsgnj.vv": 88,
        "vfsgnjn.vf": 89,
        "vfsgnjn.vv": 90,
        "vfsgnjx.vf": 91,
        "vfsgnjx.vv": 92,
        "vfslide1down.vf": 93,
        "vfslide1up.vf": 94,
        "vfsqrt.v": 95,
        "vfsub.vf": 96,
        "vfsub.vv": 97,
        "vfwadd.vf": 98,
        "vfwadd.vv": 99,
        "vfwadd.wf": 100,
        "vfwadd.wv": 101,
        "vfwcvt.f.f.v": 102,
        "vfwcvt.f.x.v": 103,
        "vfwcvt.f.xu.v": 104,
        "vfwcvt.rtz.x.f.v": 105,
        "vfwcvt.rtz.xu.f.v": 106,
        "vfwcvt.x.f.v": 107,
        "vfwcvt.xu.f.v": 108,
        "vfwmacc.vf": 109,
        "vfwmacc.vv": 110,
        "vfwmsac.vf": 111,
        "vfwmsac.vv": 112,
        "vfwmul.vf": 113,
        "vfwmul.vv": 114,
        "vfwnmacc.vf": 115,
        "vfwnmacc.vv": 116,
        "vfwnmsac.vf": 117,
        "vfwnmsac.vv": 118,
        "vfwredosum.vs": 119,
        "vfwredusum.vs": 120,
        "vfwsub.vf": 121,
        "vfwsub.vv": 122,
        "vfwsub.wf": 123,
        "vfwsub.wv": 124,
        "vid.v": 125,
        "viota.m": 126,
        "vl1re16.v": 127,
        "vl1re32.v": 128,
        "vl1re64.v": 129,
        "vl1re8.v": 130,
        "vl2re16.v": 131,
        "vl2re32.v": 132,
        "vl2re64.v": 133,
        "vl2re8.v": 134,
        "vl4re16.v": 135,
        "vl4re32.v": 136,
        "vl4re64.v": 137,
        "vl4re8.v": 138,
        "vl8re16.v": 139,
        "vl8re32.v": 140,
        "vl8re64.v": 141,
        "vl8re8.v": 142,
        "vle16.v": 143,
        "vle16ff.v": 144,
        "vle32.v": 145,
        "vle32ff.v": 146,
        "vle64.v": 147,
        "vle64ff.v": 148,
        "vle8.v": 149,
        "vle8ff.v": 150,
        "vlm.v": 151,
        "vloxei16.v": 152,
        "vloxei32.v": 153,
        "vloxei64.v": 154,
        "vloxei8.v": 155,
        "vloxseg2ei16.v": 156,
        "vloxseg2ei32.v": 157,
        "vloxseg2ei64.v": 158,
        "vloxseg2ei8.v": 159,
        "vloxseg3ei16.v": 160,
        "vloxseg3ei32.v": 161,
        "vloxseg3ei64.v": 162,
        "vloxseg3ei8.v": 163,
        "vloxseg4ei16.v": 164,
        "vloxseg4ei32.v": 165,
        "vloxseg4ei64.v": 166,
        "vloxseg4ei8.v": 167,
        "vloxseg5ei16.v": 168,
        "vloxseg5ei32.v": 169,
        "vloxseg5ei64.v": 170,
        "vloxseg5ei8.v": 171,
        "vloxseg6ei16.v": 172,
        "vloxseg6ei32.v": 173,
        "vloxseg6ei64.v": 174,
        "vloxseg6ei8.v": 175,
        "vloxseg7ei16.v": 176,
        "vloxseg7ei32.v": 177,
        "vloxseg7ei64.v": 178,
        "vloxseg7ei8.v": 179,
        "vloxseg8ei16.v": 180,
        "vloxseg8ei32.v": 181,
        "vloxseg8ei64.v": 182,
        "vloxseg8ei8.v": 183,
        "vlse16.v": 184,
        "vlse32.v": 185,
        "vlse64.v": 186,
        "vlse8.v": 187,
        "vlseg2e16.v": 188,
        "vlseg2e16ff.v": 189,
        "vlseg2e32.v": 190,
        "vlseg2e32ff.v": 191,
        "vlseg2e64.v": 192,
        "vlseg2e64ff.v": 193,
        "vlseg2e8.v": 194,
        "vlseg2e8ff.v": 195,
        "vlseg3e16.v": 196,
        "vlseg3e16ff.v": 197,
        "vlseg3e32.v": 198,
        "vlseg3e32ff.v": 199,
        "vlseg3e64.v": 200,
        "vlseg3e64ff.v": 201,
        "vlseg3e8.v": 202,
        "vlseg3e8ff.v": 203,
        "vlseg4e16.v": 204,
        "vlseg4e16ff.v": 205,
        "vlseg4e32.v": 206,
        "vlseg4e32ff.v": 207,
        "vlseg4e64.v": 208,
        "vlseg4e64ff.v": 209,
        "vlseg4e8.v": 210,
        "vlseg4e8ff.v": 211,
        "vlseg5e16.v": 212,
        "vlseg5e16ff.v": 213,
        "vlseg5e32.v": 214,
        "vlseg5e32ff.v": 215,
        "vlseg5e64.v": 216,
        "vlseg5e64ff.v": 217,
        "vlseg5e8.v": 218,
        "vlseg5e8ff.v": 219,
        "vlseg6e16.v": 220,
        "vlseg6e16ff.v": 221,
        "vlseg6e32.v": 222,
        "vlseg6e32ff.v": 223,
        "vlseg6e64.v": 224,
        "vlseg6e64ff.v": 225,
        "vlseg6e8.v": 226,
        "vlseg6e8ff.v": 227,
        "vlseg7e16.v": 228,
        "vlseg7e16ff.v": 229,
        "vlseg7e32.v": 230,
        "vlseg7e32ff.v": 231,
        "vlseg7e64.v": 232,
        "vlseg7e64ff.v": 233,
        "vlseg7e8.v": 234,
        "vlseg7e8ff.v": 235,
        "vlseg8e16.v": 236,
        "vlseg8e16ff.v": 237,
        "vlseg8e32.v": 238,
        "vlseg8e32ff.v": 239,
        "vlseg8e64.v": 240,
        "vlseg8e64ff.v": 241,
        "vlseg8e8.v": 242,
        "vlseg8e8ff.v": 243,
        "vlsseg2e16.v": 244,
        "vlsseg2e32.v": 245,
        "vlsseg2e64.v": 246,
        "vlsseg2e8.v": 247,
        "vlsseg3e16.v": 248,
        "vlsseg3e32.v": 249,
        "vlsseg3e64.v": 250,
        "vlsseg3e8.v": 251,
        "vlsseg4e16.v": 252,
        "vlsseg4e32.v": 253,
        "vlsseg4e64.v": 254,
        "vlsseg4e8.v": 255,
        "vlsseg5e16.v": 256,
        "vlsseg5e32.v": 257,
        "vlsseg5e64.v": 258,
        "vlsseg5e8.v": 259,
        "vlsseg6e16.v": 260,
        "vlsseg6e32.v": 261,
        "vlsseg6e64.v": 262,
        "vlsseg6e8.v": 263,
        "vlsseg7e16.v": 264,
        "vlsseg7e32.v": 265,
        "vlsseg7e64.v": 266,
        "vlsseg7e8.v": 267,
        "vlsseg8e16.v": 268,
        "vlsseg8e32.v": 269,
        "vlsseg8e64.v": 270,
        "vlsseg8e8.v": 271,
        "vluxei16.v": 272,
        "vluxei32.v": 273,
        "vluxei64.v": 274,
        "vluxei8.v": 275,
        "vluxseg2ei16.v": 276,
        "vluxseg2ei32.v": 277,
        "vluxseg2ei64.v": 278,
        "vluxseg2ei8.v": 279,
        "vluxseg3ei16.v": 280,
        "vluxseg3ei32.v": 281,
        "vluxseg3ei64.v": 282,
        "vluxseg3ei8.v": 283,
        "vluxseg4ei16.v": 284,
        "vluxseg4ei32.v": 285,
        "vluxseg4ei64.v": 286,
        "vluxseg4ei8.v": 287,
        "vluxseg5ei16.v": 288,
        "vluxseg5ei32.v": 289,
        "vluxseg5ei64.v": 290,
        "vluxseg5ei8.v": 291,
        "vluxseg6ei16.v": 292,
        "vluxseg6ei32.v": 293,
        "vluxseg6ei64.v": 294,
        "vluxseg6ei8.v": 295,
        "vluxseg7ei16.v": 296,
        "vluxseg7ei32.v": 297,
        "vluxseg7ei64.v": 298,
        "vluxseg7ei8.v": 299,
        "vluxseg8ei16.v": 300,
        "vluxseg8ei32.v": 301,
        "vluxseg8ei64.v": 302,
        "vluxseg8ei8.v": 303,
        "vmacc.vv": 304,
        "vmacc.vx": 305,
        "vmadc.vi": 306,
        "vmadc.vim": 307,
        "vmadc.vv": 308,
        "vmadc.vvm": 309,
        "vmadc.vx": 310,
        "vmadc.vxm": 311,
        "vmadd.vv": 312,
        "vmadd.vx": 313,
        "vmand.mm": 314,
        "vmandn.mm": 315,
        "vmax.vv": 316,
        "vmax.vx": 317,
        "vmaxu.vv": 318,
        "vmaxu.vx": 319,
        "vmerge.vim": 320,
        "vmerge.vvm": 321,
        "vmerge.vxm": 322,
        "vmfeq.vf": 323,
        "vmfeq.vv": 324,
        "vmfge.vf": 325,
        "vmfgt.vf": 326,
        "vmfle.vf": 327,
        "vmfle.vv": 328,
        "vmflt.vf": 329,
        "vmflt.vv": 330,
        "vmfne.vf": 331,
        "vmfne.vv": 332,
        "vmin.vv": 333,
        "vmin.vx": 334,
        "vminu.vv": 335,
        "vminu.vx": 336,
        "vmnand.mm": 337,
        "vmnor.mm": 338,
        "vmor.mm": 339,
        "vmorn.mm": 340,
        "vmsbc.vv": 341,
        "vmsbc.vvm": 342,
        "vmsbc.vx": 343,
        "vmsbc.vxm": 344,
        "vmsbf.m": 345,
        "vmseq.vi": 346,
        "vmseq.vv": 347,
        "vmseq.vx": 348,
        "vmsgt.vi": 349,
        "vmsgt.vx": 350,
        "vmsgtu.vi": 351,
        "vmsgtu.vx": 352,
        "vmsif.m": 353,
        "vmsle.vi": 354,
        "vmsle.vv": 355,
        "vmsle.vx": 356,
        "vmsleu.vi": 357,
        "vmsleu.vv": 358,
        "vmsleu.vx": 359,
        "vmslt.vv": 360,
        "vmslt.vx": 361,
        "vmsltu.vv": 362,
        "vmsltu.vx": 363,
        "vmsne.vi": 364,
        "vmsne.vv": 365,
        "vmsne.vx": 366,
        "vmsof.m": 367,
        "vmul.vv": 368,
        "vmul.vx": 369,
        "vmulh.vv": 370,
        "vmulh.vx": 371,
        "vmulhsu.vv": 372,
        "vmulhsu.vx": 373,
        "vmulhu.vv": 374,
        "vmulhu.vx": 375,
        "vmv.s.x": 376,
        "vmv.v.i": 377,
        "vmv.v.v": 378,
        "vmv.v.x": 379,
        "vmv.x.s": 380,
        "vmv1r.v": 381,
        "vmv2r.v": 382,
        "vmv4r.v": 383,
        "vmv8r.v": 384,
        "vmxnor.mm": 385,
        "vmxor.mm": 386,
        "vnclip.wi": 387,
        "vnclip.wv": 388,
        "vnclip.wx": 389,
        "vnclipu.wi": 390,
        "vnclipu.wv": 391,
        "vnclipu.wx": 392,
        "vnmsac.vv": 393,
        "vnmsac.vx": 394,
        "vnmsub.vv": 395,
        "vnmsub.vx": 396,
        "vnsra.wi": 397,
        "vnsra.wv": 398,
        "vnsra.wx": 399,
        "vnsrl.wi": 400,
        "vnsrl.wv": 401,
        "vnsrl.wx": 402,
        "vor.vi": 403,
        "vor.vv": 404,
        "vor.vx": 405,
        "vredand.vs": 406,
        "vredmax.vs": 407,
        "vredmaxu.vs": 408,
        "vredmin.vs": 409,
        "vredminu.vs": 410,
        "vredor.vs": 411,
        "vredsum.vs": 412,
        "vredxor.vs": 413,
        "vrem.vv": 414,
        "vrem.vx": 415,
        "vremu.vv": 416,
        "vremu.vx": 417,
        "vrgather.vi": 418,
        "vrgather.vv": 419,
        "vrgather.vx": 420,
        "vrgatherei16.vv": 421,
        "vrsub.vi": 422,
        "vrsub.vx": 423,
        "vs1r.v": 424,
        "vs2r.v": 425,
        "vs4r.v": 426,
        "vs8r.v": 427,
        "vsadd.vi": 428,
        "vsadd.vv": 429,
        "vsadd.vx": 430,
        "vsaddu.vi": 431,
        "vsaddu.vv": 432,
        "vsaddu.vx": 433,
        "vsbc.vvm": 434,
        "vsbc.vxm": 435,
        "vse16.v": 436,
        "vse32.v": 437,
        "vse64.v": 438,
        "vse8.v": 439,
        "vsetivli": 440,
        "vsetvl": 441,
        "vsetvli": 442,
        "vsext.vf2": 443,
        "vsext.vf4": 444,
        "vsext.vf8": 445,
        "vslide1down.vx": 446,
        "vslide1up.vx": 447,
        "vslidedown.vi": 448,
        "vslidedown.vx": 449,
        "vslideup.vi": 450,
        "vslideup.vx": 451,
        "vsll.vi": 452,
        "vsll.vv": 453,
        "vsll.vx": 454,
        "vsm.v": 455,
        "vsmul.vv": 456,
        "vsmul.vx": 457,
        "vsoxei16.v": 458,
        "vsoxei32.v": 459,
        "vsoxei64.v": 460,
        "vsoxei8.v": 461,
        "vsoxseg2ei16.v": 462,
        "vsoxseg2ei32.v": 463,
        "vsoxseg2ei64.v": 464,
        "vsoxseg2ei8.v": 465,
        "vsoxseg3ei16.v": 466,
        "vsoxseg3ei32.v": 467,
        "vsoxseg3ei64.v": 468,
        "vsoxseg3ei8.v": 469,
        "vsoxseg4ei16.v": 470,
        "vsoxseg4ei32.v": 471,
        "vsoxseg4ei64.v": 472,
        "vsoxseg4ei8.v": 473,
        "vsoxseg5ei16.v": 474,
        "vsoxseg5ei32.v": 475,
        "vsoxseg5ei64.v": 476,
        "vsoxseg5ei8.v": 477,
        "vsoxseg6ei16.v": 478,
        "vsoxseg6ei32.v": 479,
        "vsoxseg6ei64.v": 480,
        "vsoxseg6ei8.v": 481,
        "vsoxseg7ei16.v": 482,
        "vsoxseg7ei32.v": 483,
        "vsoxseg7ei64.v": 484,
        "vsoxseg7ei8.v": 485,
        "vsoxseg8ei16.v": 486,
        "vsoxseg8ei32.v": 487,
        "vsoxseg8ei64.v": 488,
        "vsoxseg8ei8.v": 489,
        "vsra.vi": 490,
        "vsra.vv": 491,
        "vsra.vx": 492,
        "vsrl.vi": 493,
        "vsrl.vv": 494,
        "vsrl.vx": 495,
        "vsse16.v": 496,
        "vsse32.v": 497,
        "vsse64.v": 498,
        "vsse8.v": 499,
        "vsseg2e16.v": 500,
        "vsseg2e32.v": 501,
        "vsseg2e64.v": 502,
        "vsseg2e8.v": 503,
        "vsseg3e16.v": 504,
        "vsseg3e32.v": 505,
        "vsseg3e64.v": 506,
        "vsseg3e8.v": 507,
        "vsseg4e16.v": 508,
        "vsseg4e32.v": 509,
        "vsseg4e64.v": 510,
        "vsseg4e8.v": 511,
        "vsseg5e16.v": 512,
        "vsseg5e32.v": 513,
        "vsseg5e64.v": 514,
        "vsseg5e8.v": 515,
        "vsseg6e16.v": 516,
        "vsseg6e32.v": 517,
        "vsseg6e64.v": 518,
        "vsseg6e8.v": 519,
        "vsseg7e16.v": 520,
        "vsseg7e32.v": 521,
        "vsseg7e64.v": 522,
        "vsseg7e8.v": 523,
        "vsseg8e16.v": 524,
        "vsseg8e32.v": 525,
        "vsseg8e64.v": 526,
        "vsseg8e8.v": 527,
        "vssra.vi": 528,
        "vssra.vv": 529,
        "vssra.vx": 530,
        "vssrl.vi": 531,
        "vssrl.vv": 532,
        "vssrl.vx": 533,
        "vssseg2e16.v": 534,
        "vssseg2e32.v": 535,
        "vssseg2e64.v": 536,
        "vssseg2e8.v": 537,
        "vssseg3e16.v": 538,
        "vssseg3e32.v": 539,
        "vssseg3e64.v": 540,
        "vssseg3e8.v": 541,
        "vssseg4e16.v": 542,
        "vssseg4e32.v": 543,
        "vssseg4e64.v": 544,
        "vssseg4e8.v": 545,
        "vssseg5e16.v": 546,
        "vssseg5e32.v": 547,
        "vssseg5e64.v": 548,
        "vssseg5e8.v": 549,
        "vssseg6e16.v": 550,
        "vssseg6e32.v": 551,
        "vssseg6e64.v": 552,
        "vssseg6e8.v": 553,
        "vssseg7e16.v": 554,
        "vssseg7e32.v": 555,
        "vssseg7e64.v": 556,
        "vssseg7e8.v": 557,
        "vssseg8e16.v": 558,
        "vssseg8e32.v": 559,
        "vssseg8e64.v": 560,
        "vssseg8e8.v": 561,
        "vssub.vv": 562,
        "vssub.vx": 563,
        "vssubu.vv": 564,
        "vssubu.vx": 565,
        "vsub.vv": 566,
        "vsub.vx": 567,
        "vsuxei16.v": 568,
        "vsuxei32.v": 569,
        "vsuxei64.v": 570,
        "vsuxei8.v": 571,
        "vsuxseg2ei16.v": 572,
        "vsuxseg2ei32.v": 573,
        "vsuxseg2ei64.v": 574,
        "vsuxseg2ei8.v": 575,
        "vsuxseg3ei16.v": 576,
        "vsuxseg3ei32.v": 577,
        "vsuxseg3ei64.v": 578,
        "vsuxseg3ei8.v": 579,
        "vsuxseg4ei16.v": 580,
        "vsuxseg4ei32.v": 581,
        "vsuxseg4ei64.v": 582,
        "vsuxseg4ei8.v": 583,
        "vsuxseg5ei16.v": 584,
        "vsuxseg5ei32.v": 585,
        "vsuxseg5ei64.v": 586,
        "vsuxseg5ei8.v": 587,
        "vsuxseg6ei16.v": 588,
        "vsuxseg6ei32.v": 589,
        "vsuxseg6ei64.v": 590,
        "vsuxseg6ei8.v": 591,
        "vsuxseg7ei16.v": 592,
        "vsuxseg7ei32.v": 593,
        "vsuxseg7ei64.v": 594,
        "vsuxseg7ei8.v": 595,
        "vsuxseg8ei16.v": 596,
        "vsuxseg8ei32.v": 597,
        "vsuxseg8ei64.v": 598,
        "vsuxseg8ei8.v": 599,
        "vwadd.vv": 600,
        "vwadd.vx": 601,
        "vwadd.wv": 602,
        "vwadd.wx": 603,
        "vwaddu.vv": 604,
        "vwaddu.vx": 605,
        "vwaddu.wv": 606,
        "vwaddu.wx": 607,
        "vwmacc.vv": 608,
        "vwmacc.vx": 609,
        "vwmaccsu.vv": 610,
        "vwmaccsu.vx": 611,
        "vwmaccu.vv": 612,
        "vwmaccu.vx": 613,
        "vwmaccus.vx": 614,
        "vwmul.vv": 615,
        "vwmul.vx": 616,
        "vwmulsu.vv": 617,
        "vwmulsu.vx": 618,
        "vwmulu.vv": 619,
        "vwmulu.vx": 620,
        "vwredsum.vs": 621,
        "vwredsumu.vs": 622,
        "vwsub.vv": 623,
        "vwsub.vx": 624,
        "vwsub.wv": 625,
        "vwsub.wx": 626,
        "vwsubu.vv": 627,
        "vwsubu.vx": 628,
        "vwsubu.wv": 629,
        "vwsubu.wx": 630,
        "vxor.vi": 631,
        "vxor.vv": 632,
        "vxor.vx": 633,
        "vzext.vf2": 634,
        "vzext.vf4": 635,
        "vzext.vf8": 636,
    },
}
