package com.acme.widget;

import java.util.List;
import java.util.Map;

public class Fixture {

    public int method0(int x) {
        int a = x + 0;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method1(int x) {
        int a = x + 1;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method2(int x) {
        int a = x + 2;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method3(int x) {
        int a = x + 3;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method4(int x) {
        int a = x + 4;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method5(int x) {
        int a = x + 5;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method6(int x) {
        int a = x + 6;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method7(int x) {
        int a = x + 7;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method8(int x) {
        int a = x + 8;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method9(int x) {
        int a = x + 9;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method10(int x) {
        int a = x + 10;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method11(int x) {
        int a = x + 11;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method12(int x) {
        int a = x + 12;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method13(int x) {
        int a = x + 13;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method14(int x) {
        int a = x + 14;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method15(int x) {
        int a = x + 15;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method16(int x) {
        int a = x + 16;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method17(int x) {
        int a = x + 17;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method18(int x) {
        int a = x + 18;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method19(int x) {
        int a = x + 19;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method20(int x) {
        int a = x + 20;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method21(int x) {
        int a = x + 21;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method22(int x) {
        int a = x + 22;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method23(int x) {
        int a = x + 23;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method24(int x) {
        int a = x + 24;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method25(int x) {
        int a = x + 25;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method26(int x) {
        int a = x + 26;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method27(int x) {
        int a = x + 27;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

    public int method28(int x) {
        int a = x + 28;
        if (a > 10) {
            a -= 10;
        }
        for (int i = 0; i < 3; i++) {
            a += i;
        }
        return a;
    }

}
