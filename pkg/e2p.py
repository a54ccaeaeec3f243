#!/usr/bin/env python
# coding: utf8
import e2p

if __name__ == '__main__':
    e2p.main()
